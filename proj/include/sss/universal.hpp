#pragma once

#include "sss/omega.hpp"

namespace sss {

/// Finite chain  a_n ⇸^{m_n} … ⇸^{m_1} a_0  of module elements, anchored at
/// a_0; elems lists m_1 (shallowest) first.
struct FiniteChain {
    std::string anchor;
    std::vector<std::string> elems;

    friend bool operator==(const FiniteChain&, const FiniteChain&) = default;
    friend auto operator<=>(const FiniteChain&, const FiniteChain&) = default;
};

/// Objects a_0..a_n of the chain; throws when adjacent elements do not
/// connect.
std::vector<std::string> chain_objects(const Module& m, const FiniteChain& c);

/// Eventually-periodic infinite chain: preperiod digits followed by the
/// period repeated forever.
struct PeriodicAddress {
    std::string anchor;
    std::vector<std::string> pre;
    std::vector<std::string> period;

    std::size_t preperiod_length() const { return pre.size(); }
    friend bool operator==(const PeriodicAddress&, const PeriodicAddress&) = default;
};

std::vector<std::string> validate_address(const Module& m, const PeriodicAddress& t);

/// Digit m_{k+1} (0-based k) and object a_k of the infinite chain.
std::string address_digit(const Module& m, const PeriodicAddress& t, std::size_t k);
std::string address_object(const Module& m, const PeriodicAddress& t, std::size_t k);

/// Row automaton following the address; used to build span-shaped queries.
Row address_row(const Module& m, const PeriodicAddress& t);

/// Level category 𝓘_n a: objects are depth-n chains anchored at a, morphisms
/// are ladders with identity base, composed levelwise.
struct LevelCategory {
    FinCategory cat;
    std::map<std::string, FiniteChain> chains;  // object id -> chain
};

std::vector<FiniteChain> depth_chains(const Module& m, const std::string& a, std::size_t n);
std::string chain_id(const FiniteChain& c);

LevelCategory level_category(const SelfSimilaritySystem& s, const std::string& a,
                             std::size_t n);

/// Connected components I_n a of the level category, computed by union-find
/// over ladders without materializing the morphisms.
struct LevelComponents {
    std::vector<FiniteChain> chains;
    Partition classes;  // carrier: chain ids
};

LevelComponents level_components(const SelfSimilaritySystem& s, const std::string& a,
                                 std::size_t n);

/// Truncation-induced map on classes: representative chain id at depth n+1 ->
/// representative chain id at depth n.
std::map<std::string, std::string> level_projection(const SelfSimilaritySystem& s,
                                                    const std::string& a, std::size_t n);

/// Head digit and beheaded tail; the coalgebra structure ι on representatives.
std::pair<std::string, PeriodicAddress> iota(const Module& m, const PeriodicAddress& t);

/// Prepend head ∈ M(anchor t, a); the inverse of ι on representatives.
PeriodicAddress iota_inverse(const Module& m, const std::string& head,
                             const PeriodicAddress& t);

enum class Equality { Equal, NotEqual, Unknown };

struct EqualityVerdict {
    Equality result = Equality::Unknown;
    LassoCertificate certificate;  // meaningful for Equal
    FrontierGraph graph;
};

/// Existence of an infinite identity-base span onto both addresses, decided
/// on the span-shaped frontier graph.  NotEqual is only issued when the
/// system is solvable; otherwise the negative verdict downgrades to Unknown.
EqualityVerdict decide_equal(const SelfSimilaritySystem& s, const PeriodicAddress& t,
                             const PeriodicAddress& tp);

/// Coalgebra (X, ξ) with one stored representative pair per element:
/// ξ(x) = m ⊗ x' with m ∈ M(b, a), x' ∈ Xb for x ∈ Xa.
struct Coalgebra {
    std::string name;
    SetValuedFunctor carrier;
    std::map<std::string, std::pair<std::string, std::string>> structure;

    friend bool operator==(const Coalgebra&, const Coalgebra&) = default;
};

std::vector<std::string> validate_coalgebra(const SelfSimilaritySystem& s,
                                            const Coalgebra& c);

enum class ChoiceOrder {
    Stored,         // follow the stored representative pairs
    LexAscending,   // least tensor-equal pair at every step
    LexDescending,  // greatest tensor-equal pair at every step
    Middle,         // middle candidate under lexicographic order
};

/// Iterate ξ from x; the element walk enters a cycle, yielding an exact
/// eventually-periodic address.  The digits under any choice order form a
/// resolution of x (re-verified against the stored structure).
PeriodicAddress resolve(const SelfSimilaritySystem& s, const Coalgebra& c,
                        const std::string& x, ChoiceOrder order = ChoiceOrder::Stored);

/// ξ̄(x): the canonical map into the universal solution.  Requires a
/// solvable system.
PeriodicAddress canonical_map(const SelfSimilaritySystem& s, const Coalgebra& c,
                              const std::string& x);

/// All sequences x_0 = x, …, x_n with ξ(x_i) tensor-equal to
/// (m_{i+1}, x_{i+1}) along the prefix p.
std::vector<std::vector<std::string>> resolutions_along_prefix(
    const SelfSimilaritySystem& s, const Coalgebra& c, const std::string& x,
    const FiniteChain& p);

/// Res set: elements of X(anchor p) having a resolution along p, computed by
/// backward recursion.
std::vector<std::string> res_set(const SelfSimilaritySystem& s, const Coalgebra& c,
                                 const FiniteChain& p);

}  // namespace sss
