#include "sss/nondegeneracy.hpp"

#include <algorithm>

namespace sss {

std::string NDFailure::describe() const {
    if (kind == "ND2")
        return "ND2: parallel pair (" + f + ", " + fp + ") agrees on " + x +
               " but admits no fork-with-element";
    return "ND1: cospan (" + f + ", " + fp + ") identifies " + x + " and " + xp +
           " but admits no square-with-element";
}

namespace {

// Is there a commutative square g: e->dom f, g': e->dom f' over the cospan
// (f, f') together with z in Xe mapping to x and x'?
bool nd1_witness(const SetValuedFunctor& X, const std::string& f, const std::string& fp,
                 const std::string& x, const std::string& xp) {
    const FinCategory& c = X.base;
    for (const auto& e : c.objects)
        for (const auto& g : c.hom(e, c.dom(f)))
            for (const auto& gp : c.hom(e, c.dom(fp))) {
                if (c.compose(g, f) != c.compose(gp, fp)) continue;
                for (const auto& z : X.at(e))
                    if (X.apply(g, z) == x && X.apply(gp, z) == xp) return true;
            }
    return false;
}

// Is there a fork g: e->dom f with fg = f'g and z in Xe mapping to x?
bool nd2_witness(const SetValuedFunctor& X, const std::string& f, const std::string& fp,
                 const std::string& x) {
    const FinCategory& c = X.base;
    for (const auto& e : c.objects)
        for (const auto& g : c.hom(e, c.dom(f))) {
            if (c.compose(g, f) != c.compose(g, fp)) continue;
            for (const auto& z : X.at(e))
                if (X.apply(g, z) == x) return true;
        }
    return false;
}

}  // namespace

NDVerdict check_nondegenerate_functor(const SetValuedFunctor& x, bool skip_trivial_cases) {
    NDVerdict v;
    const FinCategory& c = x.base;
    std::vector<std::string> mors;
    for (const auto& m : c.morphisms) mors.push_back(m.id);
    std::sort(mors.begin(), mors.end());

    for (const auto& f : mors)
        for (const auto& fp : mors) {
            if (c.cod(f) != c.cod(fp)) continue;
            if (skip_trivial_cases && (c.is_isomorphism(f) || c.is_isomorphism(fp)))
                continue;
            std::vector<std::string> xs = x.at(c.dom(f));
            std::vector<std::string> xps = x.at(c.dom(fp));
            std::sort(xs.begin(), xs.end());
            std::sort(xps.begin(), xps.end());
            for (const auto& xe : xs)
                for (const auto& xpe : xps) {
                    if (x.apply(f, xe) != x.apply(fp, xpe)) continue;
                    if (!nd1_witness(x, f, fp, xe, xpe))
                        v.failures.push_back({"ND1", f, fp, xe, xpe});
                }
        }
    for (const auto& f : mors)
        for (const auto& fp : mors) {
            if (c.dom(f) != c.dom(fp) || c.cod(f) != c.cod(fp)) continue;
            if (skip_trivial_cases && f == fp) continue;
            std::vector<std::string> xs = x.at(c.dom(f));
            std::sort(xs.begin(), xs.end());
            for (const auto& xe : xs) {
                if (x.apply(f, xe) != x.apply(fp, xe)) continue;
                if (!nd2_witness(x, f, fp, xe))
                    v.failures.push_back({"ND2", f, fp, xe, ""});
            }
        }
    v.holds = v.failures.empty();
    return v;
}

FlatVerdict check_flat(const SetValuedFunctor& x) {
    if (x.empty()) return {false, "no object has elements"};

    // every pair of elements admits a common span-with-element
    std::vector<std::pair<std::string, std::string>> all;
    for (const auto& a : x.base.objects)
        for (const auto& e : x.at(a)) all.push_back({a, e});
    for (const auto& [a, e] : all)
        for (const auto& [ap, ep] : all) {
            bool found = false;
            for (const auto& c : x.base.objects) {
                for (const auto& g : x.base.hom(c, a)) {
                    for (const auto& gp : x.base.hom(c, ap)) {
                        for (const auto& z : x.at(c))
                            if (x.apply(g, z) == e && x.apply(gp, z) == ep) {
                                found = true;
                                break;
                            }
                        if (found) break;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (!found)
                return {false, "elements " + e + " and " + ep + " admit no common span"};
        }

    NDVerdict nd = check_nondegenerate_functor(x);
    for (const auto& fail : nd.failures)
        if (fail.kind == "ND2") return {false, fail.describe()};
    return {true, ""};
}

std::vector<SetValuedFunctor> components_of_functor(const SetValuedFunctor& x) {
    // union-find over all elements, joined by morphism actions
    std::vector<std::string> carrier;
    for (const auto& [a, elems] : x.elements)
        carrier.insert(carrier.end(), elems.begin(), elems.end());
    Partition p(carrier);
    for (const auto& [key, val] : x.action) p.merge(key.second, val);

    std::map<std::string, SetValuedFunctor> comps;
    for (const auto& cls : p.classes()) {
        SetValuedFunctor& comp = comps[cls.front()];
        comp.name = x.name + "[" + cls.front() + "]";
        comp.base = x.base;
    }
    for (const auto& a : x.base.objects)
        for (const auto& e : x.at(a))
            comps[p.representative(e)].elements[a].push_back(e);
    for (const auto& [key, val] : x.action)
        comps[p.representative(key.second)].action[key] = val;

    std::vector<SetValuedFunctor> out;
    for (auto& [rep, comp] : comps) out.push_back(std::move(comp));
    return out;
}

SetValuedFunctor module_row(const Module& m, const std::string& b) {
    SetValuedFunctor x;
    x.name = m.name + "(" + b + ",-)";
    x.base = m.cod_cat;
    for (const auto& a : m.cod_cat.objects) x.elements[a] = m.at(b, a);
    for (const auto& [key, val] : m.left) {
        if (m.home.at(key.second).first != b) continue;
        x.action[key] = val;
    }
    return x;
}

ModuleNDVerdict check_nondegenerate_module(const Module& m) {
    ModuleNDVerdict v;
    for (const auto& b : m.dom_cat.objects) {
        NDVerdict row = check_nondegenerate_functor(module_row(m, b));
        for (auto& fail : row.failures) v.failures.push_back({b, std::move(fail)});
    }
    v.holds = v.failures.empty();
    return v;
}

bool system_nondegenerate(const SelfSimilaritySystem& s) {
    if (!s.nondegenerate_cache)
        s.nondegenerate_cache = check_nondegenerate_module(s.mod).holds;
    return *s.nondegenerate_cache;
}

}  // namespace sss
