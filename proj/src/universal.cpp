#include "sss/universal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sss/nondegeneracy.hpp"

namespace sss {

std::vector<std::string> chain_objects(const Module& m, const FiniteChain& c) {
    std::vector<std::string> objs{c.anchor};
    for (const auto& e : c.elems) {
        if (m.target(e) != objs.back())
            throw std::invalid_argument("chain element " + e + " does not land in " +
                                        objs.back());
        objs.push_back(m.source(e));
    }
    return objs;
}

std::vector<std::string> validate_address(const Module& m, const PeriodicAddress& t) {
    std::vector<std::string> report;
    if (t.period.empty()) {
        report.push_back("period is empty");
        return report;
    }
    try {
        std::vector<std::string> objs = chain_objects(m, {t.anchor, t.pre});
        std::vector<std::string> pobjs = chain_objects(m, {objs.back(), t.period});
        if (pobjs.back() != pobjs.front())
            report.push_back("period does not return to its anchor " + pobjs.front() +
                             " (reaches " + pobjs.back() + ")");
    } catch (const std::exception& e) {
        report.push_back(e.what());
    }
    return report;
}

std::string address_digit(const Module& m, const PeriodicAddress& t, std::size_t k) {
    (void)m;
    if (k < t.pre.size()) return t.pre[k];
    return t.period[(k - t.pre.size()) % t.period.size()];
}

std::string address_object(const Module& m, const PeriodicAddress& t, std::size_t k) {
    if (k == 0) return t.anchor;
    return m.source(address_digit(m, t, k - 1));
}

Row address_row(const Module& m, const PeriodicAddress& t) {
    if (!validate_address(m, t).empty())
        throw std::invalid_argument("invalid address");
    Row r;
    const std::size_t p = t.pre.size(), q = t.period.size();
    std::vector<std::string> objs{t.anchor};
    for (std::size_t i = 0; i < p + q; ++i)
        objs.push_back(m.source(address_digit(m, t, i)));
    for (std::size_t i = 0; i < p + q; ++i) {
        const std::string id = std::to_string(i);
        r.states.push_back(id);
        r.state_object[id] = objs[i];
        const std::size_t nxt = (i + 1 < p + q) ? i + 1 : p;
        r.next[id] = {{address_digit(m, t, i), std::to_string(nxt)}};
    }
    r.initial = "0";
    return r;
}

std::string chain_id(const FiniteChain& c) {
    std::string out = c.anchor + ":";
    for (std::size_t i = 0; i < c.elems.size(); ++i) {
        if (i) out += ",";
        out += c.elems[i];
    }
    return out;
}

std::vector<FiniteChain> depth_chains(const Module& m, const std::string& a, std::size_t n) {
    std::vector<FiniteChain> out;
    FiniteChain cur{a, {}};
    std::function<void(const std::string&)> go = [&](const std::string& obj) {
        if (cur.elems.size() == n) {
            out.push_back(cur);
            return;
        }
        for (const auto& e : m.elements_into(obj)) {
            cur.elems.push_back(e);
            go(m.source(e));
            cur.elems.pop_back();
        }
    };
    go(a);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Enumerate all identity-base ladders out of `src`, invoking visit with the
// target chain and the vertical morphisms f_1..f_n.
void ladders_from(const SelfSimilaritySystem& s, const FiniteChain& src,
                  const std::function<void(const FiniteChain&,
                                           const std::vector<std::string>&)>& visit) {
    const Module& mod = s.mod;
    const FinCategory& cat = s.cat;
    const std::vector<std::string> objs = chain_objects(mod, src);
    FiniteChain dst{src.anchor, {}};
    std::vector<std::string> verts;

    std::function<void(std::size_t, const std::string&, const std::string&)> go =
        [&](std::size_t i, const std::string& f_prev, const std::string& tgt_obj) {
            if (i == src.elems.size()) {
                visit(dst, verts);
                return;
            }
            // need m'_{i+1}, f_{i+1} with m'·f = f_prev·m_{i+1}
            const std::string rhs = mod.left_act(f_prev, src.elems[i]);
            for (const auto& bp : cat.objects)
                for (const auto& mp : mod.at(bp, tgt_obj))
                    for (const auto& f : cat.hom(objs[i + 1], bp)) {
                        if (mod.right_act(mp, f) != rhs) continue;
                        dst.elems.push_back(mp);
                        verts.push_back(f);
                        go(i + 1, f, bp);
                        dst.elems.pop_back();
                        verts.pop_back();
                    }
        };
    go(0, cat.identity.at(src.anchor), src.anchor);
}

}  // namespace

LevelCategory level_category(const SelfSimilaritySystem& s, const std::string& a,
                             std::size_t n) {
    LevelCategory out;
    out.cat.name = "level(" + a + "," + std::to_string(n) + ")";
    const std::vector<FiniteChain> chains = depth_chains(s.mod, a, n);
    for (const auto& c : chains) {
        const std::string id = chain_id(c);
        out.cat.objects.push_back(id);
        out.chains[id] = c;
    }
    std::sort(out.cat.objects.begin(), out.cat.objects.end());

    auto vert_key = [](const std::vector<std::string>& fs) {
        std::string k;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (i) k += ",";
            k += fs[i];
        }
        return k;
    };
    // (src, dst, verticals) -> morphism id
    std::map<std::tuple<std::string, std::string, std::string>, std::string> by_data;
    for (const auto& c : chains) {
        const std::string src = chain_id(c);
        ladders_from(s, c, [&](const FiniteChain& dst, const std::vector<std::string>& fs) {
            const std::string did = chain_id(dst);
            bool is_id = (did == src);
            for (const auto& f : fs)
                if (!s.cat.is_identity(f)) is_id = false;
            const std::string key = vert_key(fs);
            std::string mid = is_id ? "1@" + src : "[" + key + "]" + src + "=>" + did;
            if (by_data.count({src, did, key})) return;
            by_data[{src, did, key}] = mid;
            out.cat.morphisms.push_back({mid, src, did});
            if (is_id) out.cat.identity[src] = mid;
        });
    }
    // every object has the identity ladder, found above; now the table
    for (const auto& [d1, id1] : by_data)
        for (const auto& [d2, id2] : by_data) {
            if (std::get<1>(d1) != std::get<0>(d2)) continue;
            if (out.cat.is_identity(id1) || out.cat.is_identity(id2)) continue;
            std::vector<std::string> f1, f2, comp;
            {
                std::string cur;
                for (char ch : std::get<2>(d1) + ",")
                    if (ch == ',') {
                        f1.push_back(cur);
                        cur.clear();
                    } else
                        cur += ch;
                for (char ch : std::get<2>(d2) + ",")
                    if (ch == ',') {
                        f2.push_back(cur);
                        cur.clear();
                    } else
                        cur += ch;
            }
            for (std::size_t i = 0; i < f1.size(); ++i)
                comp.push_back(s.cat.compose(f1[i], f2[i]));
            out.cat.composition[{id1, id2}] =
                by_data.at({std::get<0>(d1), std::get<1>(d2), vert_key(comp)});
        }
    return out;
}

LevelComponents level_components(const SelfSimilaritySystem& s, const std::string& a,
                                 std::size_t n) {
    LevelComponents out;
    out.chains = depth_chains(s.mod, a, n);
    std::vector<std::string> carrier;
    for (const auto& c : out.chains) carrier.push_back(chain_id(c));
    out.classes = Partition(carrier);
    for (const auto& c : out.chains) {
        const std::string src = chain_id(c);
        ladders_from(s, c, [&](const FiniteChain& dst, const std::vector<std::string>&) {
            out.classes.merge(src, chain_id(dst));
        });
    }
    return out;
}

std::map<std::string, std::string> level_projection(const SelfSimilaritySystem& s,
                                                    const std::string& a, std::size_t n) {
    LevelComponents deep = level_components(s, a, n + 1);
    LevelComponents shallow = level_components(s, a, n);
    std::map<std::string, std::string> out;
    for (const auto& c : deep.chains) {
        const std::string rep = deep.classes.representative(chain_id(c));
        FiniteChain trunc{c.anchor, {c.elems.begin(), c.elems.end() - 1}};
        const std::string target = shallow.classes.representative(chain_id(trunc));
        auto it = out.find(rep);
        if (it != out.end() && it->second != target)
            throw std::logic_error("level projection not well-defined at " + rep);
        out[rep] = target;
    }
    return out;
}

std::pair<std::string, PeriodicAddress> iota(const Module& m, const PeriodicAddress& t) {
    if (!validate_address(m, t).empty()) throw std::invalid_argument("invalid address");
    const std::string head = address_digit(m, t, 0);
    PeriodicAddress tail;
    tail.anchor = m.source(head);
    if (!t.pre.empty()) {
        tail.pre.assign(t.pre.begin() + 1, t.pre.end());
        tail.period = t.period;
    } else {
        tail.period.assign(t.period.begin() + 1, t.period.end());
        tail.period.push_back(t.period.front());
    }
    return {head, tail};
}

PeriodicAddress iota_inverse(const Module& m, const std::string& head,
                             const PeriodicAddress& t) {
    if (m.source(head) != t.anchor)
        throw std::invalid_argument("iota_inverse: head does not land on the address anchor");
    PeriodicAddress out;
    out.anchor = m.target(head);
    out.pre.push_back(head);
    out.pre.insert(out.pre.end(), t.pre.begin(), t.pre.end());
    out.period = t.period;
    return out;
}

EqualityVerdict decide_equal(const SelfSimilaritySystem& s, const PeriodicAddress& t,
                             const PeriodicAddress& tp) {
    if (t.anchor != tp.anchor)
        throw std::invalid_argument("decide_equal: addresses anchored at different objects");
    EqualityVerdict v;
    v.graph = span_graph(s, address_row(s.mod, t), address_row(s.mod, tp));
    if (auto lasso = has_infinite_path(v.graph)) {
        v.result = Equality::Equal;
        v.certificate = *lasso;
    } else {
        v.result = check_solvable(s) ? Equality::NotEqual : Equality::Unknown;
    }
    return v;
}

namespace {

struct TensorCtx {
    std::map<std::string, QuotientSet> q;
};

TensorCtx make_ctx(const SelfSimilaritySystem& s, const SetValuedFunctor& x) {
    TensorCtx ctx;
    tensor_functor(s.mod, x, &ctx.q);
    return ctx;
}

std::string cls(const TensorCtx& ctx, const Module& mod,
                const std::pair<std::string, std::string>& pair) {
    return ctx.q.at(mod.target(pair.first)).class_of(pair.first, pair.second);
}

// All pairs (m, y) tensor-equal to the stored structure value of x, sorted.
std::vector<std::pair<std::string, std::string>> candidates(
    const SelfSimilaritySystem& s, const Coalgebra& c, const TensorCtx& ctx,
    const std::string& x) {
    const auto& stored = c.structure.at(x);
    const std::string a = c.carrier.object_of(x);
    const std::string want = cls(ctx, s.mod, stored);
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& m : s.mod.elements_into(a))
        for (const auto& y : c.carrier.at(s.mod.source(m)))
            if (cls(ctx, s.mod, {m, y}) == want) out.push_back({m, y});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::string> validate_coalgebra(const SelfSimilaritySystem& s,
                                            const Coalgebra& c) {
    std::vector<std::string> report;
    if (!(c.carrier.base == s.cat)) {
        report.push_back("carrier is not a functor on the system's category");
        return report;
    }
    auto fr = validate_functor(c.carrier);
    report.insert(report.end(), fr.begin(), fr.end());
    if (!report.empty()) return report;

    NDVerdict nd = check_nondegenerate_functor(c.carrier);
    for (const auto& fail : nd.failures) report.push_back("carrier " + fail.describe());
    if (!report.empty()) return report;

    for (const auto& a : s.cat.objects)
        for (const auto& x : c.carrier.at(a)) {
            auto it = c.structure.find(x);
            if (it == c.structure.end()) {
                report.push_back("no structure entry for element " + x);
                continue;
            }
            const auto& [m, xp] = it->second;
            if (!s.mod.home.count(m) || s.mod.target(m) != a)
                report.push_back("structure of " + x + " uses module element " + m +
                                 " not landing at " + a);
            else {
                const auto& xs = c.carrier.at(s.mod.source(m));
                if (std::find(xs.begin(), xs.end(), xp) == xs.end())
                    report.push_back("structure of " + x + " pairs " + m +
                                     " with foreign element " + xp);
            }
        }
    for (const auto& [x, pair] : c.structure) {
        bool known = false;
        for (const auto& a : s.cat.objects) {
            const auto& xs = c.carrier.at(a);
            if (std::find(xs.begin(), xs.end(), x) != xs.end()) known = true;
        }
        if (!known) report.push_back("structure entry for unknown element " + x);
    }
    if (!report.empty()) return report;

    TensorCtx ctx = make_ctx(s, c.carrier);
    for (const auto& f : s.cat.morphisms) {
        if (s.cat.is_identity(f.id)) continue;
        for (const auto& x : c.carrier.at(f.dom)) {
            const auto& [m, xp] = c.structure.at(x);
            const auto& target = c.structure.at(c.carrier.apply(f.id, x));
            if (cls(ctx, s.mod, {s.mod.left_act(f.id, m), xp}) !=
                cls(ctx, s.mod, target))
                report.push_back("naturality fails at (" + f.id + ", " + x + ")");
        }
    }
    return report;
}

PeriodicAddress resolve(const SelfSimilaritySystem& s, const Coalgebra& c,
                        const std::string& x, ChoiceOrder order) {
    auto vr = validate_coalgebra(s, c);
    if (!vr.empty()) throw std::invalid_argument("resolve: invalid coalgebra: " + vr.front());

    TensorCtx ctx = make_ctx(s, c.carrier);
    auto choose = [&](const std::string& cur) -> std::pair<std::string, std::string> {
        if (order == ChoiceOrder::Stored) return c.structure.at(cur);
        auto cand = candidates(s, c, ctx, cur);
        if (order == ChoiceOrder::LexAscending) return cand.front();
        if (order == ChoiceOrder::LexDescending) return cand.back();
        return cand[cand.size() / 2];
    };

    PeriodicAddress out;
    out.anchor = c.carrier.object_of(x);
    std::vector<std::string> digits;
    std::map<std::string, std::size_t> pos;
    std::string cur = x;
    while (true) {
        auto it = pos.find(cur);
        if (it != pos.end()) {
            out.pre.assign(digits.begin(), digits.begin() + it->second);
            out.period.assign(digits.begin() + it->second, digits.end());
            break;
        }
        pos[cur] = digits.size();
        auto [m, nxt] = choose(cur);
        // a chosen pair must be tensor-equal to the stored representative
        if (cls(ctx, s.mod, {m, nxt}) != cls(ctx, s.mod, c.structure.at(cur)))
            throw std::logic_error("resolve: chosen pair is not a resolution step");
        digits.push_back(m);
        cur = nxt;
    }
    return out;
}

PeriodicAddress canonical_map(const SelfSimilaritySystem& s, const Coalgebra& c,
                              const std::string& x) {
    if (!check_solvable(s))
        throw std::invalid_argument("canonical_map: system is not solvable");
    return resolve(s, c, x, ChoiceOrder::Stored);
}

std::vector<std::vector<std::string>> resolutions_along_prefix(
    const SelfSimilaritySystem& s, const Coalgebra& c, const std::string& x,
    const FiniteChain& p) {
    if (c.carrier.object_of(x) != p.anchor)
        throw std::invalid_argument("resolutions_along_prefix: prefix not anchored at x's object");
    chain_objects(s.mod, p);
    TensorCtx ctx = make_ctx(s, c.carrier);

    std::vector<std::vector<std::string>> out;
    std::vector<std::string> seq{x};
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (i == p.elems.size()) {
            out.push_back(seq);
            return;
        }
        const std::string want = cls(ctx, s.mod, c.structure.at(seq.back()));
        const std::string& m = p.elems[i];
        std::vector<std::string> ys = c.carrier.at(s.mod.source(m));
        std::sort(ys.begin(), ys.end());
        for (const auto& y : ys) {
            if (cls(ctx, s.mod, {m, y}) != want) continue;
            seq.push_back(y);
            go(i + 1);
            seq.pop_back();
        }
    };
    go(0);
    return out;
}

std::vector<std::string> res_set(const SelfSimilaritySystem& s, const Coalgebra& c,
                                 const FiniteChain& p) {
    const std::vector<std::string> objs = chain_objects(s.mod, p);
    TensorCtx ctx = make_ctx(s, c.carrier);

    std::vector<std::string> layer = c.carrier.at(objs.back());
    for (std::size_t i = p.elems.size(); i-- > 0;) {
        const std::string& m = p.elems[i];
        std::vector<std::string> prev;
        for (const auto& x : c.carrier.at(objs[i])) {
            const std::string have = cls(ctx, s.mod, c.structure.at(x));
            for (const auto& y : layer)
                if (cls(ctx, s.mod, {m, y}) == have) {
                    prev.push_back(x);
                    break;
                }
        }
        layer = std::move(prev);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace sss
