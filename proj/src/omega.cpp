#include "sss/omega.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "sss/nondegeneracy.hpp"

namespace sss {

namespace {

constexpr char kSep = '\x1f';

std::string enc(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += kSep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> dec(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == kSep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

void require_system(const SelfSimilaritySystem& s, const char* who) {
    if (!validate_system(s).empty())
        throw std::invalid_argument(std::string(who) + ": system fails validation");
    if (!system_nondegenerate(s))
        throw std::invalid_argument(std::string(who) + ": system module is degenerate");
}

}  // namespace

std::optional<std::size_t> FrontierGraph::state_index(const std::string& s) const {
    auto it = std::find(states.begin(), states.end(), s);
    if (it == states.end()) return std::nullopt;
    return static_cast<std::size_t>(it - states.begin());
}

std::optional<LassoCertificate> has_infinite_path(const FrontierGraph& g) {
    const std::size_t n = g.states.size();
    std::vector<std::vector<std::size_t>> out_edges(n);
    for (std::size_t i = 0; i < g.transitions.size(); ++i)
        out_edges[g.transitions[i].from].push_back(i);

    // reachable set
    std::vector<bool> reach(n, false);
    std::deque<std::size_t> todo(g.initial.begin(), g.initial.end());
    for (std::size_t s : g.initial) reach[s] = true;
    while (!todo.empty()) {
        std::size_t s = todo.front();
        todo.pop_front();
        for (std::size_t e : out_edges[s]) {
            std::size_t t = g.transitions[e].to;
            if (!reach[t]) {
                reach[t] = true;
                todo.push_back(t);
            }
        }
    }

    // peel states with no successor among survivors; what remains carries an
    // infinite forward path
    std::vector<bool> alive = reach;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < n; ++s) {
            if (!alive[s]) continue;
            bool has_succ = false;
            for (std::size_t e : out_edges[s])
                if (alive[g.transitions[e].to]) {
                    has_succ = true;
                    break;
                }
            if (!has_succ) {
                alive[s] = false;
                changed = true;
            }
        }
    }

    std::optional<std::size_t> start;
    for (std::size_t s : g.initial)
        if (alive[s]) {
            start = s;
            break;
        }
    if (!start) return std::nullopt;

    // walk least-index surviving transitions until a state repeats
    std::vector<std::size_t> path_states{*start};
    std::vector<std::size_t> path_edges;
    std::map<std::size_t, std::size_t> seen{{*start, 0}};
    std::size_t cur = *start;
    while (true) {
        std::size_t chosen = g.transitions.size();
        for (std::size_t e : out_edges[cur])
            if (alive[g.transitions[e].to]) {
                chosen = e;
                break;
            }
        path_edges.push_back(chosen);
        cur = g.transitions[chosen].to;
        auto it = seen.find(cur);
        if (it != seen.end()) {
            LassoCertificate lasso;
            lasso.stem.assign(path_edges.begin(), path_edges.begin() + it->second);
            lasso.cycle.assign(path_edges.begin() + it->second, path_edges.end());
            return lasso;
        }
        seen[cur] = path_edges.size();
        path_states.push_back(cur);
    }
}

bool verify_lasso(const FrontierGraph& g, const LassoCertificate& lasso) {
    if (lasso.cycle.empty()) return false;
    std::vector<std::size_t> all = lasso.stem;
    all.insert(all.end(), lasso.cycle.begin(), lasso.cycle.end());
    for (std::size_t e : all)
        if (e >= g.transitions.size()) return false;

    const std::size_t first = g.transitions[all.front()].from;
    if (std::find(g.initial.begin(), g.initial.end(), first) == g.initial.end())
        return false;
    for (std::size_t i = 0; i + 1 < all.size(); ++i)
        if (g.transitions[all[i]].to != g.transitions[all[i + 1]].from) return false;
    if (g.transitions[all.back()].to != g.transitions[lasso.cycle.front()].from)
        return false;

    if (g.checker)
        for (std::size_t e : all) {
            const auto& t = g.transitions[e];
            if (!g.checker(g.states[t.from], t, g.states[t.to])) return false;
        }
    return true;
}

bool truncation_nonempty(const FrontierGraph& g, std::size_t depth) {
    std::set<std::size_t> level(g.initial.begin(), g.initial.end());
    for (std::size_t k = 0; k < depth && !level.empty(); ++k) {
        std::set<std::size_t> next;
        for (const auto& t : g.transitions)
            if (level.count(t.from)) next.insert(t.to);
        level = std::move(next);
    }
    return !level.empty();
}

Row free_row(const Module& m, const std::string& anchor) {
    Row r;
    r.initial = anchor;
    std::vector<std::string> objs = m.dom_cat.objects;
    std::sort(objs.begin(), objs.end());
    for (const auto& b : objs) {
        r.states.push_back(b);
        r.state_object[b] = b;
        auto& nx = r.next[b];
        for (const auto& q : m.elements_into(b)) nx.push_back({q, m.source(q)});
    }
    return r;
}

FrontierGraph span_graph(const SelfSimilaritySystem& s, const Row& left, const Row& right) {
    require_system(s, "span_graph");
    const Module& mod = s.mod;
    const FinCategory& cat = s.cat;

    const std::string anchor = left.state_object.at(left.initial);
    if (right.state_object.at(right.initial) != anchor)
        throw std::invalid_argument("span_graph: rows start at different objects");

    FrontierGraph g;
    std::map<std::string, std::size_t> index;
    auto intern = [&](const std::string& st) {
        auto it = index.find(st);
        if (it != index.end()) return it->second;
        index[st] = g.states.size();
        g.states.push_back(st);
        return g.states.size() - 1;
    };

    const std::string init =
        enc({left.initial, right.initial, cat.identity.at(anchor), cat.identity.at(anchor)});
    g.initial.push_back(intern(init));

    std::deque<std::size_t> todo{g.initial.front()};
    std::set<std::size_t> expanded;
    while (!todo.empty()) {
        std::size_t si = todo.front();
        todo.pop_front();
        if (!expanded.insert(si).second) continue;
        const auto parts = dec(g.states[si]);
        const std::string &ls = parts[0], &rs = parts[1], &gl = parts[2], &gr = parts[3];
        const std::string c = cat.dom(gl);

        for (const auto& q : mod.elements_into(c)) {
            const std::string d = mod.source(q);
            const std::string lq = mod.left_act(gl, q);
            const std::string rq = mod.left_act(gr, q);
            for (const auto& [ml, nls] : left.next.at(ls))
                for (const auto& h : cat.hom(d, left.state_object.at(nls))) {
                    if (mod.right_act(ml, h) != lq) continue;
                    for (const auto& [mr, nrs] : right.next.at(rs))
                        for (const auto& hp : cat.hom(d, right.state_object.at(nrs))) {
                            if (mod.right_act(mr, hp) != rq) continue;
                            std::size_t ti = intern(enc({nls, nrs, h, hp}));
                            g.transitions.push_back(
                                {si, ti, {{"q", q}, {"m", ml}, {"m'", mr}}});
                            if (!expanded.count(ti)) todo.push_back(ti);
                        }
                }
        }
    }

    Row lrow = left, rrow = right;
    g.checker = [mod, cat, lrow, rrow](const std::string& from,
                                       const FrontierGraph::Transition& t,
                                       const std::string& to) {
        const auto f = dec(from), u = dec(to);
        const std::string &ls = f[0], &rs = f[1], &gl = f[2], &gr = f[3];
        const std::string &nls = u[0], &nrs = u[1], &h = u[2], &hp = u[3];
        const std::string& q = t.labels.at("q");
        const std::string& ml = t.labels.at("m");
        const std::string& mr = t.labels.at("m'");
        if (cat.dom(gl) != cat.dom(gr)) return false;
        if (mod.target(q) != cat.dom(gl)) return false;
        const std::string d = mod.source(q);
        if (cat.dom(h) != d || cat.dom(hp) != d) return false;
        auto row_step_ok = [](const Row& r, const std::string& st, const std::string& m,
                              const std::string& nst) {
            const auto& nx = r.next.at(st);
            return std::find(nx.begin(), nx.end(), std::make_pair(m, nst)) != nx.end();
        };
        if (!row_step_ok(lrow, ls, ml, nls) || !row_step_ok(rrow, rs, mr, nrs)) return false;
        if (cat.cod(h) != lrow.state_object.at(nls)) return false;
        if (cat.cod(hp) != rrow.state_object.at(nrs)) return false;
        return mod.left_act(gl, q) == mod.right_act(ml, h) &&
               mod.left_act(gr, q) == mod.right_act(mr, hp);
    };
    return g;
}

FrontierGraph s1_graph(const SelfSimilaritySystem& s) {
    require_system(s, "s1_graph");
    const Module& mod = s.mod;
    const FinCategory& cat = s.cat;

    FrontierGraph g;
    std::map<std::string, std::size_t> index;
    std::vector<std::string> mors;
    for (const auto& m : cat.morphisms) mors.push_back(m.id);
    std::sort(mors.begin(), mors.end());
    for (const auto& f : mors)
        for (const auto& fp : mors) {
            if (cat.cod(f) != cat.cod(fp)) continue;
            index[enc({f, fp})] = g.states.size();
            g.states.push_back(enc({f, fp}));
        }

    for (std::size_t si = 0; si < g.states.size(); ++si) {
        const auto parts = dec(g.states[si]);
        const std::string &f = parts[0], &fp = parts[1];
        for (const auto& p : mod.elements_into(cat.cod(f))) {
            const std::string bn = mod.source(p);
            for (const auto& h : cat.morphisms_into(bn)) {
                const std::string ph = mod.right_act(p, h);
                bool m_found = false;
                std::string m_label;
                for (const auto& m : mod.at(cat.dom(h), cat.dom(f)))
                    if (mod.left_act(f, m) == ph) {
                        m_found = true;
                        m_label = m;
                        break;
                    }
                if (!m_found) continue;
                for (const auto& hp : cat.morphisms_into(bn))
                    for (const auto& mp : mod.at(cat.dom(hp), cat.dom(fp)))
                        if (mod.left_act(fp, mp) == mod.right_act(p, hp))
                            g.transitions.push_back(
                                {si, index.at(enc({h, hp})),
                                 {{"m", m_label}, {"p", p}, {"m'", mp}}});
            }
        }
    }

    g.checker = [mod, cat](const std::string& from, const FrontierGraph::Transition& t,
                           const std::string& to) {
        const auto f = dec(from), u = dec(to);
        const std::string& m = t.labels.at("m");
        const std::string& p = t.labels.at("p");
        const std::string& mp = t.labels.at("m'");
        if (mod.target(m) != cat.dom(f[0]) || mod.source(m) != cat.dom(u[0])) return false;
        if (mod.target(mp) != cat.dom(f[1]) || mod.source(mp) != cat.dom(u[1])) return false;
        if (mod.target(p) != cat.cod(f[0]) || mod.source(p) != cat.cod(u[0])) return false;
        if (cat.cod(u[0]) != cat.cod(u[1])) return false;
        return mod.right_act(p, u[0]) == mod.left_act(f[0], m) &&
               mod.right_act(p, u[1]) == mod.left_act(f[1], mp);
    };
    return g;
}

FrontierGraph s2_graph(const SelfSimilaritySystem& s) {
    require_system(s, "s2_graph");
    const Module& mod = s.mod;
    const FinCategory& cat = s.cat;

    FrontierGraph g;
    std::map<std::string, std::size_t> index;
    std::vector<std::string> mors;
    for (const auto& m : cat.morphisms) mors.push_back(m.id);
    std::sort(mors.begin(), mors.end());
    for (const auto& f : mors)
        for (const auto& fp : mors) {
            if (cat.dom(f) != cat.dom(fp) || cat.cod(f) != cat.cod(fp)) continue;
            index[enc({f, fp})] = g.states.size();
            g.states.push_back(enc({f, fp}));
        }

    for (std::size_t si = 0; si < g.states.size(); ++si) {
        const auto parts = dec(g.states[si]);
        const std::string &f = parts[0], &fp = parts[1];
        for (const auto& p : mod.elements_into(cat.cod(f))) {
            const std::string bn = mod.source(p);
            for (const auto& m : mod.elements_into(cat.dom(f))) {
                const std::string an = mod.source(m);
                for (const auto& h : cat.hom(an, bn)) {
                    if (mod.right_act(p, h) != mod.left_act(f, m)) continue;
                    for (const auto& hp : cat.hom(an, bn))
                        if (mod.right_act(p, hp) == mod.left_act(fp, m))
                            g.transitions.push_back(
                                {si, index.at(enc({h, hp})), {{"m", m}, {"p", p}}});
                }
            }
        }
    }

    g.checker = [mod, cat](const std::string& from, const FrontierGraph::Transition& t,
                           const std::string& to) {
        const auto f = dec(from), u = dec(to);
        const std::string& m = t.labels.at("m");
        const std::string& p = t.labels.at("p");
        if (mod.target(m) != cat.dom(f[0]) || mod.source(m) != cat.dom(u[0])) return false;
        if (mod.target(p) != cat.cod(f[0]) || mod.source(p) != cat.cod(u[0])) return false;
        if (cat.dom(u[0]) != cat.dom(u[1]) || cat.cod(u[0]) != cat.cod(u[1])) return false;
        return mod.right_act(p, u[0]) == mod.left_act(f[0], m) &&
               mod.right_act(p, u[1]) == mod.left_act(f[1], m);
    };
    return g;
}

SVerdict check_S1(const SelfSimilaritySystem& s) {
    SVerdict v;
    v.graph = s1_graph(s);
    for (std::size_t si = 0; si < v.graph.states.size(); ++si) {
        const auto parts = dec(v.graph.states[si]);
        if (complete_cospan(s.cat, parts[0], parts[1])) continue;
        v.graph.initial = {si};
        if (auto lasso = has_infinite_path(v.graph)) {
            v.holds = false;
            v.witness = {parts[0], parts[1]};
            v.lasso = *lasso;
            return v;
        }
    }
    v.graph.initial.clear();
    return v;
}

SVerdict check_S2(const SelfSimilaritySystem& s) {
    SVerdict v;
    v.graph = s2_graph(s);
    for (std::size_t si = 0; si < v.graph.states.size(); ++si) {
        const auto parts = dec(v.graph.states[si]);
        if (fork_parallel_pair(s.cat, parts[0], parts[1])) continue;
        v.graph.initial = {si};
        if (auto lasso = has_infinite_path(v.graph)) {
            v.holds = false;
            v.witness = {parts[0], parts[1]};
            v.lasso = *lasso;
            return v;
        }
    }
    v.graph.initial.clear();
    return v;
}

bool check_solvable(const SelfSimilaritySystem& s) {
    if (!s.solvable_cache) s.solvable_cache = check_S1(s).holds && check_S2(s).holds;
    return *s.solvable_cache;
}

}  // namespace sss
