#pragma once

#include <optional>

#include "sss/fincat.hpp"

namespace sss {

/// Two-sided module M: B ⇸ A.  Elements of M(b,a) carry a left action by
/// morphisms f: a -> a' of A and a right action by morphisms g: b' -> b of B.
/// Element ids are unique module-wide.
struct Module {
    std::string name;
    FinCategory dom_cat;  // B, the source side (b)
    FinCategory cod_cat;  // A, the target side (a)
    std::map<std::pair<std::string, std::string>, std::vector<std::string>> elements;
    std::map<std::pair<std::string, std::string>, std::string> left;   // (f, m) -> f·m
    std::map<std::pair<std::string, std::string>, std::string> right;  // (m, g) -> m·g
    std::map<std::string, std::pair<std::string, std::string>> home;   // m -> (b, a)

    const std::vector<std::string>& at(const std::string& b, const std::string& a) const;
    std::string left_act(const std::string& f, const std::string& m) const;
    std::string right_act(const std::string& m, const std::string& g) const;
    std::string source(const std::string& m) const;  // b
    std::string target(const std::string& m) const;  // a
    std::vector<std::string> all_elements() const;
    /// Union over b of M(b, a), sorted.
    std::vector<std::string> elements_into(const std::string& a) const;
    /// Rebuild the home index from the elements table.
    void reindex();

    friend bool operator==(const Module&, const Module&) = default;
};

std::vector<std::string> validate_module(const Module& m);

/// Sizes of the categories elt M(-,a): pairs (object count, morphism count)
/// keyed by a.  Reported by the validator and exposed for the CLI.
std::map<std::string, std::pair<std::size_t, std::size_t>> elt_sizes(const Module& m);

Module hom_module(const FinCategory& c);

/// Quotient of a finite set of raw pairs under a generated relation.
/// Keys are "m⊗x" encodings; the representative of a class is its
/// lexicographically least raw pair.
struct QuotientSet {
    std::vector<std::pair<std::string, std::string>> index;  // sorted raw pairs
    Partition classes;

    static std::string key(const std::string& m, const std::string& x);
    std::string class_of(const std::string& m, const std::string& x) const;
};

/// (M⊗X)a = (Σ_b M(b,a)×Xb) / ((m·g, x) ~ (m, g·x)).  Element ids of the
/// result are the class keys of the least representatives.  When
/// out_quotients is non-null the per-object quotient sets are returned too.
SetValuedFunctor tensor_functor(const Module& m, const SetValuedFunctor& x,
                                std::map<std::string, QuotientSet>* out_quotients = nullptr);

/// (M⊗N)(c,a) = (Σ_b M(b,a)×N(c,b)) / ((m·g, n) ~ (m, g·n)).
Module tensor_modules(const Module& m, const Module& n,
                      std::map<std::pair<std::string, std::string>, QuotientSet>*
                          out_quotients = nullptr);

struct SpanWitness {
    std::string left_leg;   // f:  c -> b   with f·z = lhs element
    std::string right_leg;  // f': c -> b'  with f'·z = rhs element
    std::string apex_element;
};

struct TensorEqualResult {
    bool equal = false;
    std::optional<SpanWitness> witness;
};

/// Span-witness equality test for m⊗x = m'⊗x' in (M⊗X)a, per the
/// characterization valid for nondegenerate X.  Throws std::invalid_argument
/// when X fails nondegeneracy (the caller may fall back to class lookup).
TensorEqualResult tensor_equal(const Module& m, const SetValuedFunctor& x,
                               const std::pair<std::string, std::string>& lhs,
                               const std::pair<std::string, std::string>& rhs);

/// Class-lookup equality in M⊗X; total, no nondegeneracy requirement.
bool tensor_equal_by_class(const Module& m, const SetValuedFunctor& x,
                           const std::pair<std::string, std::string>& lhs,
                           const std::pair<std::string, std::string>& rhs);

struct SelfSimilaritySystem {
    FinCategory cat;
    Module mod;  // dom_cat == cod_cat == cat
    mutable std::optional<bool> nondegenerate_cache;
    mutable std::optional<bool> solvable_cache;
};

std::vector<std::string> validate_system(const SelfSimilaritySystem& s);

}  // namespace sss
