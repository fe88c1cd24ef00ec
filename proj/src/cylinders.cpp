#include "sss/cylinders.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sss {

Row prefix_then_free_row(const Module& m, const FiniteChain& prefix) {
    const std::vector<std::string> objs = chain_objects(m, prefix);
    Row r;
    for (std::size_t i = 0; i < prefix.elems.size(); ++i) {
        const std::string id = "p" + std::to_string(i);
        r.states.push_back(id);
        r.state_object[id] = objs[i];
        const std::string nxt = (i + 1 < prefix.elems.size())
                                    ? "p" + std::to_string(i + 1)
                                    : "f:" + objs[i + 1];
        r.next[id] = {{prefix.elems[i], nxt}};
    }
    std::vector<std::string> sorted_objs = m.dom_cat.objects;
    std::sort(sorted_objs.begin(), sorted_objs.end());
    for (const auto& b : sorted_objs) {
        const std::string id = "f:" + b;
        r.states.push_back(id);
        r.state_object[id] = b;
        auto& nx = r.next[id];
        for (const auto& q : m.elements_into(b)) nx.push_back({q, "f:" + m.source(q)});
    }
    r.initial = prefix.elems.empty() ? "f:" + prefix.anchor : "p0";
    return r;
}

namespace {

void require_solvable(const SelfSimilaritySystem& s, const char* who) {
    if (!check_solvable(s))
        throw std::invalid_argument(std::string(who) + ": system is not solvable");
}

}  // namespace

bool cylinder_member(const SelfSimilaritySystem& s, const PeriodicAddress& t,
                     const Cylinder& cyl, LassoCertificate* certificate) {
    require_solvable(s, "cylinder_member");
    if (t.anchor != cyl.prefix.anchor)
        throw std::invalid_argument("cylinder_member: anchor mismatch");
    FrontierGraph g = span_graph(s, address_row(s.mod, t),
                                 prefix_then_free_row(s.mod, cyl.prefix));
    auto lasso = has_infinite_path(g);
    if (lasso && certificate) *certificate = *lasso;
    return lasso.has_value();
}

bool cylinder_intersect(const SelfSimilaritySystem& s, const Cylinder& c1,
                        const Cylinder& c2) {
    require_solvable(s, "cylinder_intersect");
    if (c1.prefix.anchor != c2.prefix.anchor)
        throw std::invalid_argument("cylinder_intersect: anchor mismatch");
    FrontierGraph g = span_graph(s, prefix_then_free_row(s.mod, c1.prefix),
                                 prefix_then_free_row(s.mod, c2.prefix));
    return has_infinite_path(g).has_value();
}

bool rn_related(const SelfSimilaritySystem& s, const PeriodicAddress& t,
                const PeriodicAddress& tp, std::size_t n) {
    require_solvable(s, "rn_related");
    if (t.anchor != tp.anchor)
        throw std::invalid_argument("rn_related: anchor mismatch");
    for (const auto& p : depth_chains(s.mod, t.anchor, n)) {
        Cylinder cyl{p};
        if (cylinder_member(s, t, cyl) && cylinder_member(s, tp, cyl)) return true;
    }
    return false;
}

std::optional<std::size_t> first_separating_n(const SelfSimilaritySystem& s,
                                              const PeriodicAddress& t,
                                              const PeriodicAddress& tp,
                                              std::size_t max_n) {
    for (std::size_t n = 0; n <= max_n; ++n)
        if (!rn_related(s, t, tp, n)) return n;
    return std::nullopt;
}

std::vector<std::string> inverse_image_cylinder(const SelfSimilaritySystem& s,
                                                const Coalgebra& c, const Cylinder& cyl) {
    require_solvable(s, "inverse_image_cylinder");
    std::vector<std::string> out;
    std::vector<std::string> xs = c.carrier.at(cyl.prefix.anchor);
    std::sort(xs.begin(), xs.end());
    for (const auto& x : xs)
        if (cylinder_member(s, canonical_map(s, c, x), cyl)) out.push_back(x);
    return out;
}

AdjacencyGraph adjacency_graph(const SelfSimilaritySystem& s, const std::string& a,
                               std::size_t n) {
    require_solvable(s, "adjacency_graph");
    AdjacencyGraph g;
    g.anchor = a;
    g.depth = n;
    g.nodes = depth_chains(s.mod, a, n);
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
            if (cylinder_intersect(s, Cylinder{g.nodes[i]}, Cylinder{g.nodes[j]}))
                g.edges.push_back({i, j});
    return g;
}

std::string adjacency_dot(const AdjacencyGraph& g) {
    std::ostringstream out;
    out << "graph cylinders {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        std::string label;
        for (std::size_t k = 0; k < g.nodes[i].elems.size(); ++k) {
            if (k) label += ",";
            label += g.nodes[i].elems[k];
        }
        out << "  n" << i << " [label=\"" << label << "\"];\n";
    }
    for (const auto& [i, j] : g.edges) out << "  n" << i << " -- n" << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string adjacency_json(const AdjacencyGraph& g) {
    nlohmann::json j;
    j["anchor"] = g.anchor;
    j["depth"] = g.depth;
    j["nodes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        j["nodes"].push_back({{"id", i}, {"chain", g.nodes[i].elems}});
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges)
        j["edges"].push_back(nlohmann::json::array({a, b}));
    return j.dump(2) + "\n";
}

}  // namespace sss
