#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sss {

/// A morphism of a finite category, identified by a unique id.
struct Morphism {
    std::string id;
    std::string dom;
    std::string cod;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Finite category presented by objects, morphisms and an explicit
/// composition table.  The table maps (f, g) with cod f = dom g to g∘f;
/// pairs involving identities may be omitted and are filled in by compose().
struct FinCategory {
    std::string name;
    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::map<std::string, std::string> identity;  // object -> morphism id
    std::map<std::pair<std::string, std::string>, std::string> composition;

    bool has_object(const std::string& a) const;
    const Morphism* morphism(const std::string& f) const;
    std::string dom(const std::string& f) const;
    std::string cod(const std::string& f) const;
    bool is_identity(const std::string& f) const;

    /// g∘f for cod f = dom g.  Identity-aware; throws on non-composable or
    /// missing table entries.
    std::string compose(const std::string& f, const std::string& g) const;

    std::vector<std::string> hom(const std::string& x, const std::string& y) const;
    std::vector<std::string> morphisms_from(const std::string& x) const;
    std::vector<std::string> morphisms_into(const std::string& y) const;
    bool is_isomorphism(const std::string& f) const;

    friend bool operator==(const FinCategory&, const FinCategory&) = default;
};

std::vector<std::string> validate_category(const FinCategory& c);

/// Quotient of a finite carrier with deterministic representatives
/// (lexicographically least member of each class).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::string> carrier);

    void merge(const std::string& x, const std::string& y);
    std::string representative(const std::string& x) const;
    bool same_class(const std::string& x, const std::string& y) const;
    std::size_t class_count() const;

    /// Classes sorted by representative; members sorted within each class.
    std::vector<std::vector<std::string>> classes() const;
    const std::vector<std::string>& carrier() const { return carrier_; }

private:
    std::vector<std::string> carrier_;
    mutable std::map<std::string, std::string> parent_;
    std::string find(const std::string& x) const;
};

/// Functor into finite sets: a finite element list per object and an action
/// table per non-identity morphism.
struct SetValuedFunctor {
    std::string name;
    FinCategory base;
    std::map<std::string, std::vector<std::string>> elements;
    std::map<std::pair<std::string, std::string>, std::string> action;

    const std::vector<std::string>& at(const std::string& a) const;
    std::string apply(const std::string& f, const std::string& x) const;
    /// The object carrying x; throws if x is not an element.
    std::string object_of(const std::string& x) const;
    bool empty() const;

    friend bool operator==(const SetValuedFunctor&, const SetValuedFunctor&) = default;
};

std::vector<std::string> validate_functor(const SetValuedFunctor& x);

/// Category of elements of a set-valued functor (covariant convention:
/// one morphism (a,p) -> (a',p') for each f: a -> a' with (Xf)p = p').
struct ElementsCategory {
    FinCategory cat;
    // elt-object id -> (base object, element)
    std::map<std::string, std::pair<std::string, std::string>> object_data;
    // elt-morphism id -> base morphism id
    std::map<std::string, std::string> projection;
};

ElementsCategory category_of_elements(const SetValuedFunctor& x);

Partition connected_components(const FinCategory& c);

FinCategory opposite(const FinCategory& c);

struct FilteredVerdict {
    bool holds = false;
    // "span" or "parallel-pair" plus the offending morphism ids on failure
    std::string witness_kind;
    std::vector<std::string> witness;
};

FilteredVerdict is_componentwise_filtered(const FinCategory& c);
FilteredVerdict is_componentwise_cofiltered(const FinCategory& c);

/// Search for g: e -> dom f, g': e -> dom f' with f∘g = f'∘g' (a commutative
/// square over the cospan f, f'); lexicographically least witness.
std::optional<std::pair<std::string, std::string>>
complete_cospan(const FinCategory& c, const std::string& f, const std::string& fp);

/// Search for g: e -> dom f with f∘g = f'∘g, for a parallel pair f, f'.
std::optional<std::string>
fork_parallel_pair(const FinCategory& c, const std::string& f, const std::string& fp);

}  // namespace sss
