#pragma once

#include <functional>

#include "sss/module.hpp"

namespace sss {

/// Finite transition graph whose infinite paths from initial states
/// correspond to infinite ladders of one query shape.  States are encoded
/// strings; transitions carry the module elements / morphisms realizing one
/// ladder level.  `checker` re-verifies a single transition against the
/// shape's commutativity equations, independently of how the transition was
/// constructed.
struct FrontierGraph {
    struct Transition {
        std::size_t from = 0;
        std::size_t to = 0;
        std::map<std::string, std::string> labels;
    };

    std::vector<std::string> states;
    std::vector<std::size_t> initial;
    std::vector<Transition> transitions;
    std::function<bool(const std::string& from, const Transition& t,
                       const std::string& to)> checker;

    std::optional<std::size_t> state_index(const std::string& s) const;
};

/// stem: transition indices from an initial state; cycle: nonempty transition
/// cycle starting at the stem's end.
struct LassoCertificate {
    std::vector<std::size_t> stem;
    std::vector<std::size_t> cycle;
};

/// True iff some initial state reaches a cycle; the certificate unrolls to a
/// level-wise valid infinite path.
std::optional<LassoCertificate> has_infinite_path(const FrontierGraph& g);

/// Independent re-verification: connectivity of stem + cycle, membership of
/// the start in the initial set, and the shape equations of every transition
/// via g.checker.
bool verify_lasso(const FrontierGraph& g, const LassoCertificate& lasso);

/// Depth-n truncation: is some state reachable from the initial set in
/// exactly n steps?  (Level-set computation; the cross-validation oracle for
/// has_infinite_path.)
bool truncation_nonempty(const FrontierGraph& g, std::size_t depth);

/// A row automaton: generator of one chain of the ladder, one module element
/// per level.  Used as the "shape data" of span-type queries.
struct Row {
    std::vector<std::string> states;
    std::map<std::string, std::string> state_object;
    std::string initial;
    // state -> choices of (module element into the state's object, next state)
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> next;
};

/// Row that emits any chain starting at the given object.
Row free_row(const Module& m, const std::string& anchor);

/// Span-shaped frontier graph: states (left row state, right row state,
/// g, g') with g, g' sharing a domain and landing in the rows' current
/// objects; transitions pick a middle element q and verticals with
/// g·q = m·h and g'·q = m'·h'.  Both rows must start at the same object.
FrontierGraph span_graph(const SelfSimilaritySystem& s, const Row& left, const Row& right);

/// Triple-ladder graph for S1.  States are cospans (f, f') with a shared
/// codomain; level equations p·f_next = f·m and p·f'_next = f'·m'.
FrontierGraph s1_graph(const SelfSimilaritySystem& s);

/// Serial-ladder graph for S2.  States are parallel pairs; the top element m
/// and middle element p are shared between the two legs.
FrontierGraph s2_graph(const SelfSimilaritySystem& s);

struct SVerdict {
    bool holds = true;
    // on failure: the non-completable cospan / non-forkable pair and a lasso
    std::pair<std::string, std::string> witness;
    LassoCertificate lasso;
    FrontierGraph graph;
};

SVerdict check_S1(const SelfSimilaritySystem& s);
SVerdict check_S2(const SelfSimilaritySystem& s);

/// Condition S = S1 and S2; the artifact's verdict for "a universal solution
/// exists".  Cached on the system.
bool check_solvable(const SelfSimilaritySystem& s);

}  // namespace sss
