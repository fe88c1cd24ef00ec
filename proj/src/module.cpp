#include "sss/module.hpp"

#include <algorithm>
#include <stdexcept>

#include "sss/nondegeneracy.hpp"

namespace sss {

const std::vector<std::string>& Module::at(const std::string& b, const std::string& a) const {
    static const std::vector<std::string> kEmpty;
    auto it = elements.find({b, a});
    return it == elements.end() ? kEmpty : it->second;
}

std::string Module::left_act(const std::string& f, const std::string& m) const {
    if (cod_cat.is_identity(f)) return m;
    auto it = left.find({f, m});
    if (it == left.end())
        throw std::invalid_argument("no left action entry for (" + f + ", " + m + ")");
    return it->second;
}

std::string Module::right_act(const std::string& m, const std::string& g) const {
    if (dom_cat.is_identity(g)) return m;
    auto it = right.find({m, g});
    if (it == right.end())
        throw std::invalid_argument("no right action entry for (" + m + ", " + g + ")");
    return it->second;
}

std::string Module::source(const std::string& m) const {
    auto it = home.find(m);
    if (it == home.end()) throw std::invalid_argument("not a module element: " + m);
    return it->second.first;
}

std::string Module::target(const std::string& m) const {
    auto it = home.find(m);
    if (it == home.end()) throw std::invalid_argument("not a module element: " + m);
    return it->second.second;
}

std::vector<std::string> Module::all_elements() const {
    std::vector<std::string> out;
    for (const auto& [ba, elems] : elements)
        out.insert(out.end(), elems.begin(), elems.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> Module::elements_into(const std::string& a) const {
    std::vector<std::string> out;
    for (const auto& [ba, elems] : elements)
        if (ba.second == a) out.insert(out.end(), elems.begin(), elems.end());
    std::sort(out.begin(), out.end());
    return out;
}

void Module::reindex() {
    home.clear();
    for (const auto& [ba, elems] : elements)
        for (const auto& m : elems) home[m] = ba;
}

std::map<std::string, std::pair<std::size_t, std::size_t>> elt_sizes(const Module& m) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> out;
    for (const auto& a : m.cod_cat.objects) {
        std::size_t objs = 0, mors = 0;
        for (const auto& b : m.dom_cat.objects) objs += m.at(b, a).size();
        // one morphism (b, m'·g) -> (b', m') of elt M(-,a) per g: b -> b'
        // and m' in M(b',a)
        for (const auto& g : m.dom_cat.morphisms)
            mors += m.at(g.cod, a).size();
        out[a] = {objs, mors};
    }
    return out;
}

std::vector<std::string> validate_module(const Module& m) {
    std::vector<std::string> report;
    std::map<std::string, std::pair<std::string, std::string>> home;
    for (const auto& [ba, elems] : m.elements) {
        if (!m.dom_cat.has_object(ba.first))
            report.push_back("elements declared over unknown source object " + ba.first);
        if (!m.cod_cat.has_object(ba.second))
            report.push_back("elements declared over unknown target object " + ba.second);
        for (const auto& e : elems) {
            if (home.count(e)) report.push_back("duplicate element id: " + e);
            home[e] = ba;
        }
    }
    if (home != m.home) report.push_back("home index out of date (call reindex)");
    if (!report.empty()) return report;

    auto in_set = [&](const std::string& e, const std::string& b, const std::string& a) {
        const auto& v = m.at(b, a);
        return std::find(v.begin(), v.end(), e) != v.end();
    };

    // left action totality and endpoints
    for (const auto& f : m.cod_cat.morphisms) {
        if (m.cod_cat.is_identity(f.id)) continue;
        for (const auto& [ba, elems] : m.elements) {
            if (ba.second != f.dom) continue;
            for (const auto& e : elems) {
                auto it = m.left.find({f.id, e});
                if (it == m.left.end())
                    report.push_back("missing left action of " + f.id + " on " + e);
                else if (!in_set(it->second, ba.first, f.cod))
                    report.push_back("left action " + f.id + "·" + e +
                                     " lands outside M(" + ba.first + "," + f.cod + ")");
            }
        }
    }
    // right action totality and endpoints
    for (const auto& g : m.dom_cat.morphisms) {
        if (m.dom_cat.is_identity(g.id)) continue;
        for (const auto& [ba, elems] : m.elements) {
            if (ba.first != g.cod) continue;
            for (const auto& e : elems) {
                auto it = m.right.find({e, g.id});
                if (it == m.right.end())
                    report.push_back("missing right action of " + g.id + " on " + e);
                else if (!in_set(it->second, g.dom, ba.second))
                    report.push_back("right action " + e + "·" + g.id +
                                     " lands outside M(" + g.dom + "," + ba.second + ")");
            }
        }
    }
    for (const auto& [key, val] : m.left)
        if (!home.count(key.second))
            report.push_back("left action entry for unknown element " + key.second);
    for (const auto& [key, val] : m.right)
        if (!home.count(key.first))
            report.push_back("right action entry for unknown element " + key.first);
    if (!report.empty()) return report;

    // (f'f)m = f'(fm)
    for (const auto& f : m.cod_cat.morphisms)
        for (const auto& fp : m.cod_cat.morphisms) {
            if (f.cod != fp.dom) continue;
            const std::string ff = m.cod_cat.compose(f.id, fp.id);
            for (const auto& [ba, elems] : m.elements) {
                if (ba.second != f.dom) continue;
                for (const auto& e : elems)
                    if (m.left_act(ff, e) != m.left_act(fp.id, m.left_act(f.id, e)))
                        report.push_back("left action not functorial on (" + fp.id + "∘" +
                                         f.id + ", " + e + ")");
            }
        }
    // (mg)g' = m(gg')
    for (const auto& gp : m.dom_cat.morphisms)
        for (const auto& g : m.dom_cat.morphisms) {
            if (gp.cod != g.dom) continue;
            const std::string gg = m.dom_cat.compose(gp.id, g.id);
            for (const auto& [ba, elems] : m.elements) {
                if (ba.first != g.cod) continue;
                for (const auto& e : elems)
                    if (m.right_act(e, gg) != m.right_act(m.right_act(e, g.id), gp.id))
                        report.push_back("right action not functorial on (" + e + ", " +
                                         g.id + "∘" + gp.id + ")");
            }
        }
    // (fm)g = f(mg)
    for (const auto& f : m.cod_cat.morphisms) {
        if (m.cod_cat.is_identity(f.id)) continue;
        for (const auto& g : m.dom_cat.morphisms) {
            if (m.dom_cat.is_identity(g.id)) continue;
            for (const auto& [ba, elems] : m.elements) {
                if (ba.second != f.dom || ba.first != g.cod) continue;
                for (const auto& e : elems)
                    if (m.right_act(m.left_act(f.id, e), g.id) !=
                        m.left_act(f.id, m.right_act(e, g.id)))
                        report.push_back("two-sided compatibility fails on (" + f.id +
                                         ", " + e + ", " + g.id + ")");
            }
        }
    }
    return report;
}

Module hom_module(const FinCategory& c) {
    Module m;
    m.name = "hom(" + c.name + ")";
    m.dom_cat = c;
    m.cod_cat = c;
    for (const auto& b : c.objects)
        for (const auto& a : c.objects) {
            auto h = c.hom(b, a);
            if (!h.empty()) m.elements[{b, a}] = h;
        }
    m.reindex();
    for (const auto& f : c.morphisms) {
        if (c.is_identity(f.id)) continue;
        for (const auto& e : c.morphisms)
            if (e.cod == f.dom) m.left[{f.id, e.id}] = c.compose(e.id, f.id);
    }
    for (const auto& g : c.morphisms) {
        if (c.is_identity(g.id)) continue;
        for (const auto& e : c.morphisms)
            if (g.cod == e.dom) m.right[{e.id, g.id}] = c.compose(g.id, e.id);
    }
    return m;
}

std::string QuotientSet::key(const std::string& m, const std::string& x) {
    return m + "⊗" + x;
}

std::string QuotientSet::class_of(const std::string& m, const std::string& x) const {
    return classes.representative(key(m, x));
}

SetValuedFunctor tensor_functor(const Module& m, const SetValuedFunctor& x,
                                std::map<std::string, QuotientSet>* out_quotients) {
    if (!(x.base == m.dom_cat))
        throw std::invalid_argument("tensor_functor: functor not over the module's domain category");

    SetValuedFunctor out;
    out.name = m.name + "⊗" + x.name;
    out.base = m.cod_cat;

    std::map<std::string, QuotientSet> quotients;
    for (const auto& a : m.cod_cat.objects) {
        QuotientSet q;
        for (const auto& b : m.dom_cat.objects)
            for (const auto& me : m.at(b, a))
                for (const auto& xe : x.at(b)) q.index.push_back({me, xe});
        std::sort(q.index.begin(), q.index.end());
        std::vector<std::string> carrier;
        for (const auto& [me, xe] : q.index) carrier.push_back(QuotientSet::key(me, xe));
        q.classes = Partition(carrier);
        for (const auto& g : m.dom_cat.morphisms) {
            if (m.dom_cat.is_identity(g.id)) continue;
            for (const auto& me : m.at(g.cod, a))
                for (const auto& xe : x.at(g.dom))
                    q.classes.merge(QuotientSet::key(m.right_act(me, g.id), xe),
                                    QuotientSet::key(me, x.apply(g.id, xe)));
        }
        std::vector<std::string> reps;
        for (const auto& [me, xe] : q.index) {
            const std::string r = q.class_of(me, xe);
            if (r == QuotientSet::key(me, xe)) reps.push_back(r);
        }
        std::sort(reps.begin(), reps.end());
        out.elements[a] = reps;
        quotients[a] = std::move(q);
    }
    for (const auto& f : m.cod_cat.morphisms) {
        if (m.cod_cat.is_identity(f.id)) continue;
        const QuotientSet& qd = quotients.at(f.dom);
        const QuotientSet& qc = quotients.at(f.cod);
        for (const auto& [me, xe] : qd.index) {
            const std::string k = QuotientSet::key(me, xe);
            if (qd.classes.representative(k) != k) continue;
            out.action[{f.id, k}] = qc.class_of(m.left_act(f.id, me), xe);
        }
    }
    if (out_quotients) *out_quotients = std::move(quotients);
    return out;
}

Module tensor_modules(const Module& m, const Module& n,
                      std::map<std::pair<std::string, std::string>, QuotientSet>*
                          out_quotients) {
    if (!(n.cod_cat == m.dom_cat))
        throw std::invalid_argument("tensor_modules: categories do not match");

    Module out;
    out.name = m.name + "⊗" + n.name;
    out.dom_cat = n.dom_cat;
    out.cod_cat = m.cod_cat;

    std::map<std::pair<std::string, std::string>, QuotientSet> quotients;
    for (const auto& c : n.dom_cat.objects)
        for (const auto& a : m.cod_cat.objects) {
            QuotientSet q;
            for (const auto& b : m.dom_cat.objects)
                for (const auto& me : m.at(b, a))
                    for (const auto& ne : n.at(c, b)) q.index.push_back({me, ne});
            std::sort(q.index.begin(), q.index.end());
            std::vector<std::string> carrier;
            for (const auto& [me, ne] : q.index) carrier.push_back(QuotientSet::key(me, ne));
            q.classes = Partition(carrier);
            for (const auto& g : m.dom_cat.morphisms) {
                if (m.dom_cat.is_identity(g.id)) continue;
                for (const auto& me : m.at(g.cod, a))
                    for (const auto& ne : n.at(c, g.dom))
                        q.classes.merge(QuotientSet::key(m.right_act(me, g.id), ne),
                                        QuotientSet::key(me, n.left_act(g.id, ne)));
            }
            std::vector<std::string> reps;
            for (const auto& [me, ne] : q.index) {
                const std::string r = q.class_of(me, ne);
                if (r == QuotientSet::key(me, ne)) reps.push_back(r);
            }
            std::sort(reps.begin(), reps.end());
            if (!reps.empty()) out.elements[{c, a}] = reps;
            quotients[{c, a}] = std::move(q);
        }
    out.reindex();

    // element ids may themselves contain the pairing mark, so actions are
    // computed from the stored raw pairs, never by re-splitting class keys
    using Raw = std::pair<std::string, std::string>;
    auto check_well_defined = [&](const std::string& what, const QuotientSet& q,
                                  auto act) {
        std::map<std::string, Raw> by_key;
        for (const auto& p : q.index) by_key[QuotientSet::key(p.first, p.second)] = p;
        for (const auto& p : q.index) {
            const std::string k = QuotientSet::key(p.first, p.second);
            const std::string rep = q.classes.representative(k);
            if (rep == k) continue;
            if (act(p) != act(by_key.at(rep)))
                throw std::logic_error("tensor_modules: " + what +
                                       " action not well-defined on class of " + k);
        }
    };

    for (const auto& f : m.cod_cat.morphisms) {
        if (m.cod_cat.is_identity(f.id)) continue;
        for (const auto& c : n.dom_cat.objects) {
            const QuotientSet& qd = quotients.at({c, f.dom});
            const QuotientSet& qc = quotients.at({c, f.cod});
            auto act = [&](const Raw& p) {
                return qc.class_of(m.left_act(f.id, p.first), p.second);
            };
            check_well_defined("left", qd, act);
            for (const auto& p : qd.index) {
                const std::string k = QuotientSet::key(p.first, p.second);
                if (qd.classes.representative(k) != k) continue;
                out.left[{f.id, k}] = act(p);
            }
        }
    }
    for (const auto& h : n.dom_cat.morphisms) {
        if (n.dom_cat.is_identity(h.id)) continue;
        for (const auto& a : m.cod_cat.objects) {
            const QuotientSet& qd = quotients.at({h.cod, a});
            const QuotientSet& qc = quotients.at({h.dom, a});
            auto act = [&](const Raw& p) {
                return qc.class_of(p.first, n.right_act(p.second, h.id));
            };
            check_well_defined("right", qd, act);
            for (const auto& p : qd.index) {
                const std::string k = QuotientSet::key(p.first, p.second);
                if (qd.classes.representative(k) != k) continue;
                out.right[{k, h.id}] = act(p);
            }
        }
    }
    if (out_quotients) *out_quotients = std::move(quotients);
    return out;
}

TensorEqualResult tensor_equal(const Module& m, const SetValuedFunctor& x,
                               const std::pair<std::string, std::string>& lhs,
                               const std::pair<std::string, std::string>& rhs) {
    NDVerdict nd = check_nondegenerate_functor(x);
    if (!nd.holds)
        throw std::invalid_argument(
            "tensor_equal: span-witness semantics requires a nondegenerate functor");

    const std::string b = m.source(lhs.first);
    const std::string bp = m.source(rhs.first);
    if (m.target(lhs.first) != m.target(rhs.first))
        throw std::invalid_argument("tensor_equal: elements live over different objects");

    std::vector<std::string> objs = m.dom_cat.objects;
    std::sort(objs.begin(), objs.end());
    for (const auto& c : objs)
        for (const auto& f : m.dom_cat.hom(c, b))
            for (const auto& fp : m.dom_cat.hom(c, bp)) {
                if (m.right_act(lhs.first, f) != m.right_act(rhs.first, fp)) continue;
                std::vector<std::string> zs = x.at(c);
                std::sort(zs.begin(), zs.end());
                for (const auto& z : zs)
                    if (x.apply(f, z) == lhs.second && x.apply(fp, z) == rhs.second)
                        return {true, SpanWitness{f, fp, z}};
            }
    return {false, std::nullopt};
}

bool tensor_equal_by_class(const Module& m, const SetValuedFunctor& x,
                           const std::pair<std::string, std::string>& lhs,
                           const std::pair<std::string, std::string>& rhs) {
    const std::string a = m.target(lhs.first);
    if (m.target(rhs.first) != a) return false;
    std::map<std::string, QuotientSet> qs;
    tensor_functor(m, x, &qs);
    const QuotientSet& q = qs.at(a);
    return q.class_of(lhs.first, lhs.second) == q.class_of(rhs.first, rhs.second);
}

std::vector<std::string> validate_system(const SelfSimilaritySystem& s) {
    std::vector<std::string> report = validate_category(s.cat);
    if (!report.empty()) return report;
    if (!(s.mod.dom_cat == s.cat) || !(s.mod.cod_cat == s.cat))
        report.push_back("module is not over the system's category on both sides");
    auto mod_report = validate_module(s.mod);
    report.insert(report.end(), mod_report.begin(), mod_report.end());
    return report;
}

}  // namespace sss
