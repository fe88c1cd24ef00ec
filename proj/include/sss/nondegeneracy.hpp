#pragma once

#include "sss/module.hpp"

namespace sss {

/// A counterexample to ND1 or ND2.
///   ND1: cospan f: a->b, f': a'->b with elements x, x', fx = f'x', and no
///        commutative square with an apex element mapping onto both.
///   ND2: parallel pair f, f': a->b with element x, fx = f'x, and no fork
///        with an apex element mapping onto x.
struct NDFailure {
    std::string kind;  // "ND1" or "ND2"
    std::string f, fp;
    std::string x, xp;  // xp empty for ND2
    std::string describe() const;
};

struct NDVerdict {
    bool holds = true;
    std::vector<NDFailure> failures;
};

/// Exhaustive ND1/ND2 check.  With skip_trivial_cases the search omits ND1
/// instances where a leg is an isomorphism and ND2 instances with f = f',
/// which always succeed; the slow reference path checks them anyway.
NDVerdict check_nondegenerate_functor(const SetValuedFunctor& x,
                                      bool skip_trivial_cases = true);

struct FlatVerdict {
    bool holds = true;
    std::string reason;
};

/// Flatness: nonempty, every two elements admit a common span-with-element,
/// and ND2.
FlatVerdict check_flat(const SetValuedFunctor& x);

/// Decomposition into summands with connected categories of elements.
std::vector<SetValuedFunctor> components_of_functor(const SetValuedFunctor& x);

/// M(b,-) as a functor on the module's codomain category; morphisms act by
/// the left action.
SetValuedFunctor module_row(const Module& m, const std::string& b);

/// Module nondegeneracy: every M(b,-) nondegenerate.  Failures are reported
/// per source object b (prefixed in describe()).
struct ModuleNDVerdict {
    bool holds = true;
    std::vector<std::pair<std::string, NDFailure>> failures;  // (b, failure)
};

ModuleNDVerdict check_nondegenerate_module(const Module& m);

/// Cached system-level verdict.
bool system_nondegenerate(const SelfSimilaritySystem& s);

}  // namespace sss
