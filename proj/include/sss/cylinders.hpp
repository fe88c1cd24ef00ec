#pragma once

#include "sss/universal.hpp"

namespace sss {

/// Basic closed set of the constructed topology: the classes of addresses
/// admitting a representative starting with the given prefix.  Depth 0
/// denotes all of Ia.
struct Cylinder {
    FiniteChain prefix;
};

/// Row emitting the cylinder's prefix for its first levels and arbitrary
/// chain elements afterwards.
Row prefix_then_free_row(const Module& m, const FiniteChain& prefix);

/// Does some representative of t's class extend the cylinder prefix?
bool cylinder_member(const SelfSimilaritySystem& s, const PeriodicAddress& t,
                     const Cylinder& cyl, LassoCertificate* certificate = nullptr);

/// Is the intersection of the two cylinders nonempty?
bool cylinder_intersect(const SelfSimilaritySystem& s, const Cylinder& c1,
                        const Cylinder& c2);

/// R_n relation: a common depth-n cylinder contains both points.
bool rn_related(const SelfSimilaritySystem& s, const PeriodicAddress& t,
                const PeriodicAddress& tp, std::size_t n);

/// Least n <= max_n with rn_related false, if any.
std::optional<std::size_t> first_separating_n(const SelfSimilaritySystem& s,
                                              const PeriodicAddress& t,
                                              const PeriodicAddress& tp,
                                              std::size_t max_n);

/// { x in X(anchor) : canonical_map(x) lies in cyl }.
std::vector<std::string> inverse_image_cylinder(const SelfSimilaritySystem& s,
                                                const Coalgebra& c, const Cylinder& cyl);

struct AdjacencyGraph {
    std::string anchor;
    std::size_t depth = 0;
    std::vector<FiniteChain> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
};

/// Depth-n chains as nodes, nonempty cylinder intersections as edges.
AdjacencyGraph adjacency_graph(const SelfSimilaritySystem& s, const std::string& a,
                               std::size_t n);

std::string adjacency_dot(const AdjacencyGraph& g);
std::string adjacency_json(const AdjacencyGraph& g);

}  // namespace sss
