#include "sss/fincat.hpp"

#include <algorithm>
#include <stdexcept>

namespace sss {

bool FinCategory::has_object(const std::string& a) const {
    return std::find(objects.begin(), objects.end(), a) != objects.end();
}

const Morphism* FinCategory::morphism(const std::string& f) const {
    for (const auto& m : morphisms)
        if (m.id == f) return &m;
    return nullptr;
}

std::string FinCategory::dom(const std::string& f) const {
    const Morphism* m = morphism(f);
    if (!m) throw std::invalid_argument("unknown morphism: " + f);
    return m->dom;
}

std::string FinCategory::cod(const std::string& f) const {
    const Morphism* m = morphism(f);
    if (!m) throw std::invalid_argument("unknown morphism: " + f);
    return m->cod;
}

bool FinCategory::is_identity(const std::string& f) const {
    for (const auto& [obj, id] : identity)
        if (id == f) return true;
    return false;
}

std::string FinCategory::compose(const std::string& f, const std::string& g) const {
    if (cod(f) != dom(g))
        throw std::invalid_argument("non-composable pair: " + f + ", " + g);
    if (is_identity(f)) return g;
    if (is_identity(g)) return f;
    auto it = composition.find({f, g});
    if (it == composition.end())
        throw std::invalid_argument("missing composite for: " + f + ", " + g);
    return it->second;
}

std::vector<std::string> FinCategory::hom(const std::string& x, const std::string& y) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms)
        if (m.dom == x && m.cod == y) out.push_back(m.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> FinCategory::morphisms_from(const std::string& x) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms)
        if (m.dom == x) out.push_back(m.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> FinCategory::morphisms_into(const std::string& y) const {
    std::vector<std::string> out;
    for (const auto& m : morphisms)
        if (m.cod == y) out.push_back(m.id);
    std::sort(out.begin(), out.end());
    return out;
}

bool FinCategory::is_isomorphism(const std::string& f) const {
    if (is_identity(f)) return true;
    for (const std::string& g : hom(cod(f), dom(f)))
        if (compose(f, g) == identity.at(dom(f)) && compose(g, f) == identity.at(cod(f)))
            return true;
    return false;
}

std::vector<std::string> validate_category(const FinCategory& c) {
    std::vector<std::string> report;
    std::map<std::string, const Morphism*> by_id;
    for (const auto& m : c.morphisms) {
        if (by_id.count(m.id))
            report.push_back("duplicate morphism id: " + m.id);
        by_id[m.id] = &m;
        if (!c.has_object(m.dom))
            report.push_back("morphism " + m.id + " has unknown dom " + m.dom);
        if (!c.has_object(m.cod))
            report.push_back("morphism " + m.id + " has unknown cod " + m.cod);
    }
    for (const std::string& a : c.objects) {
        auto it = c.identity.find(a);
        if (it == c.identity.end()) {
            report.push_back("object " + a + " has no identity");
            continue;
        }
        const Morphism* m = c.morphism(it->second);
        if (!m || m->dom != a || m->cod != a)
            report.push_back("identity of " + a + " is not an endomorphism of " + a);
    }
    if (!report.empty()) return report;

    // totality and endpoint correctness of the composition table
    for (const auto& f : c.morphisms)
        for (const auto& g : c.morphisms) {
            if (f.cod != g.dom) {
                if (c.composition.count({f.id, g.id}))
                    report.push_back("composite declared for non-composable pair (" +
                                     f.id + ", " + g.id + ")");
                continue;
            }
            if (c.is_identity(f.id) || c.is_identity(g.id)) continue;
            auto it = c.composition.find({f.id, g.id});
            if (it == c.composition.end()) {
                report.push_back("missing composite (" + f.id + ", " + g.id + ")");
                continue;
            }
            const Morphism* h = c.morphism(it->second);
            if (!h) {
                report.push_back("composite of (" + f.id + ", " + g.id +
                                 ") is an unknown morphism " + it->second);
            } else if (h->dom != f.dom || h->cod != g.cod) {
                report.push_back("composite of (" + f.id + ", " + g.id +
                                 ") has wrong endpoints");
            }
        }
    if (!report.empty()) return report;

    // identity laws (redundant for table-omitted identities, but the table may
    // override them)
    for (const auto& f : c.morphisms) {
        if (c.compose(c.identity.at(f.dom), f.id) != f.id)
            report.push_back("left identity law fails for " + f.id);
        if (c.compose(f.id, c.identity.at(f.cod)) != f.id)
            report.push_back("right identity law fails for " + f.id);
    }

    for (const auto& e : c.morphisms)
        for (const auto& f : c.morphisms) {
            if (e.cod != f.dom) continue;
            for (const auto& g : c.morphisms) {
                if (f.cod != g.dom) continue;
                const std::string lhs = c.compose(c.compose(e.id, f.id), g.id);
                const std::string rhs = c.compose(e.id, c.compose(f.id, g.id));
                if (lhs != rhs)
                    report.push_back("associativity fails on (" + e.id + ", " + f.id +
                                     ", " + g.id + "): " + lhs + " != " + rhs);
            }
        }
    return report;
}

Partition::Partition(std::vector<std::string> carrier) : carrier_(std::move(carrier)) {
    std::sort(carrier_.begin(), carrier_.end());
    for (const auto& x : carrier_) parent_[x] = x;
}

std::string Partition::find(const std::string& x) const {
    auto it = parent_.find(x);
    if (it == parent_.end()) throw std::invalid_argument("not in carrier: " + x);
    if (it->second == x) return x;
    std::string root = find(it->second);
    it->second = root;
    return root;
}

void Partition::merge(const std::string& x, const std::string& y) {
    std::string rx = find(x), ry = find(y);
    if (rx == ry) return;
    // keep the lexicographically least label as the class representative
    if (ry < rx) std::swap(rx, ry);
    parent_[ry] = rx;
}

std::string Partition::representative(const std::string& x) const { return find(x); }

bool Partition::same_class(const std::string& x, const std::string& y) const {
    return find(x) == find(y);
}

std::size_t Partition::class_count() const {
    std::size_t n = 0;
    for (const auto& x : carrier_)
        if (find(x) == x) ++n;
    return n;
}

std::vector<std::vector<std::string>> Partition::classes() const {
    std::map<std::string, std::vector<std::string>> by_rep;
    for (const auto& x : carrier_) by_rep[find(x)].push_back(x);
    std::vector<std::vector<std::string>> out;
    for (auto& [rep, members] : by_rep) {
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

const std::vector<std::string>& SetValuedFunctor::at(const std::string& a) const {
    static const std::vector<std::string> kEmpty;
    auto it = elements.find(a);
    return it == elements.end() ? kEmpty : it->second;
}

std::string SetValuedFunctor::apply(const std::string& f, const std::string& x) const {
    if (base.is_identity(f)) return x;
    auto it = action.find({f, x});
    if (it == action.end())
        throw std::invalid_argument("no action entry for (" + f + ", " + x + ")");
    return it->second;
}

std::string SetValuedFunctor::object_of(const std::string& x) const {
    for (const auto& [a, elems] : elements)
        if (std::find(elems.begin(), elems.end(), x) != elems.end()) return a;
    throw std::invalid_argument("not an element: " + x);
}

bool SetValuedFunctor::empty() const {
    for (const auto& [a, elems] : elements)
        if (!elems.empty()) return false;
    return true;
}

std::vector<std::string> validate_functor(const SetValuedFunctor& x) {
    std::vector<std::string> report;
    std::map<std::string, std::string> home;
    for (const auto& [a, elems] : x.elements) {
        if (!x.base.has_object(a)) {
            report.push_back("elements listed for unknown object " + a);
            continue;
        }
        for (const auto& e : elems) {
            if (home.count(e)) report.push_back("duplicate element id: " + e);
            home[e] = a;
        }
    }
    if (!report.empty()) return report;

    for (const auto& f : x.base.morphisms) {
        if (x.base.is_identity(f.id)) continue;
        for (const auto& e : x.at(f.dom)) {
            auto it = x.action.find({f.id, e});
            if (it == x.action.end()) {
                report.push_back("missing action of " + f.id + " on " + e);
                continue;
            }
            const auto& img = x.at(f.cod);
            if (std::find(img.begin(), img.end(), it->second) == img.end())
                report.push_back("action of " + f.id + " on " + e +
                                 " lands outside X(" + f.cod + ")");
        }
    }
    for (const auto& [key, val] : x.action) {
        const Morphism* m = x.base.morphism(key.first);
        if (!m) {
            report.push_back("action entry for unknown morphism " + key.first);
            continue;
        }
        auto it = home.find(key.second);
        if (it == home.end() || it->second != m->dom)
            report.push_back("action entry (" + key.first + ", " + key.second +
                             ") applied outside X(" + m->dom + ")");
    }
    if (!report.empty()) return report;

    for (const auto& f : x.base.morphisms)
        for (const auto& g : x.base.morphisms) {
            if (f.cod != g.dom) continue;
            const std::string gf = x.base.compose(f.id, g.id);
            for (const auto& e : x.at(f.dom))
                if (x.apply(gf, e) != x.apply(g.id, x.apply(f.id, e)))
                    report.push_back("functoriality fails: X(" + g.id + "∘" + f.id +
                                     ") != X(" + g.id + ")X(" + f.id + ") at " + e);
        }
    return report;
}

ElementsCategory category_of_elements(const SetValuedFunctor& x) {
    ElementsCategory out;
    out.cat.name = "elt(" + x.name + ")";
    auto obj_id = [](const std::string& a, const std::string& p) {
        return "(" + a + "," + p + ")";
    };
    for (const auto& a : x.base.objects)
        for (const auto& p : x.at(a)) {
            const std::string id = obj_id(a, p);
            out.cat.objects.push_back(id);
            out.object_data[id] = {a, p};
        }
    std::sort(out.cat.objects.begin(), out.cat.objects.end());

    auto mor_id = [](const std::string& f, const std::string& p) {
        return f + "@" + p;
    };
    for (const auto& id : out.cat.objects) {
        out.cat.identity[id] = "id@" + id;
        out.cat.morphisms.push_back({"id@" + id, id, id});
        out.projection["id@" + id] = x.base.identity.at(out.object_data.at(id).first);
    }
    for (const auto& f : x.base.morphisms) {
        if (x.base.is_identity(f.id)) continue;
        for (const auto& p : x.at(f.dom)) {
            const std::string id = mor_id(f.id, p);
            out.cat.morphisms.push_back({id, obj_id(f.dom, p), obj_id(f.cod, x.apply(f.id, p))});
            out.projection[id] = f.id;
        }
    }
    for (const auto& m1 : out.cat.morphisms) {
        if (out.cat.is_identity(m1.id)) continue;
        for (const auto& m2 : out.cat.morphisms) {
            if (out.cat.is_identity(m2.id) || m1.cod != m2.dom) continue;
            const std::string f = out.projection.at(m1.id);
            const std::string g = out.projection.at(m2.id);
            const std::string gf = x.base.compose(f, g);
            const std::string p = out.object_data.at(m1.dom).second;
            const std::string id = x.base.is_identity(gf) ? out.cat.identity.at(m1.dom)
                                                          : mor_id(gf, p);
            out.cat.composition[{m1.id, m2.id}] = id;
        }
    }
    return out;
}

Partition connected_components(const FinCategory& c) {
    Partition p(c.objects);
    for (const auto& m : c.morphisms) p.merge(m.dom, m.cod);
    return p;
}

FinCategory opposite(const FinCategory& c) {
    FinCategory out = c;
    out.name = c.name + "^op";
    for (auto& m : out.morphisms) std::swap(m.dom, m.cod);
    out.composition.clear();
    for (const auto& [pair, h] : c.composition)
        out.composition[{pair.second, pair.first}] = h;
    return out;
}

std::optional<std::pair<std::string, std::string>>
complete_cospan(const FinCategory& c, const std::string& f, const std::string& fp) {
    for (const std::string& e : c.objects)
        for (const std::string& g : c.hom(e, c.dom(f)))
            for (const std::string& gp : c.hom(e, c.dom(fp)))
                if (c.compose(g, f) == c.compose(gp, fp))
                    return std::make_pair(g, gp);
    return std::nullopt;
}

std::optional<std::string>
fork_parallel_pair(const FinCategory& c, const std::string& f, const std::string& fp) {
    for (const std::string& e : c.objects)
        for (const std::string& g : c.hom(e, c.dom(f)))
            if (c.compose(g, f) == c.compose(g, fp)) return g;
    return std::nullopt;
}

FilteredVerdict is_componentwise_filtered(const FinCategory& c) {
    // spans complete to commutative squares
    for (const auto& f : c.morphisms)
        for (const auto& fp : c.morphisms) {
            if (f.dom != fp.dom) continue;
            bool done = false;
            for (const std::string& e : c.objects) {
                for (const std::string& g : c.hom(f.cod, e)) {
                    for (const std::string& gp : c.hom(fp.cod, e))
                        if (c.compose(f.id, g) == c.compose(fp.id, gp)) {
                            done = true;
                            break;
                        }
                    if (done) break;
                }
                if (done) break;
            }
            if (!done) return {false, "span", {f.id, fp.id}};
        }
    // parallel pairs extend to coforks
    for (const auto& f : c.morphisms)
        for (const auto& fp : c.morphisms) {
            if (f.dom != fp.dom || f.cod != fp.cod) continue;
            bool done = false;
            for (const std::string& e : c.objects) {
                for (const std::string& h : c.hom(f.cod, e))
                    if (c.compose(f.id, h) == c.compose(fp.id, h)) {
                        done = true;
                        break;
                    }
                if (done) break;
            }
            if (!done) return {false, "parallel-pair", {f.id, fp.id}};
        }
    return {true, "", {}};
}

FilteredVerdict is_componentwise_cofiltered(const FinCategory& c) {
    FilteredVerdict v = is_componentwise_filtered(opposite(c));
    if (!v.holds && v.witness_kind == "span") v.witness_kind = "cospan";
    return v;
}

}  // namespace sss
