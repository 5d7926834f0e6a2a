#include "ladderamp/graph.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace ladderamp {

void validate_graph(const OrientedGraph& graph) {
    if (graph.vertex_count <= 0)
        throw std::invalid_argument("graph: vertex_count must be positive");
    std::set<std::pair<int, int>> seen;
    for (std::size_t j = 0; j < graph.edges.size(); ++j) {
        const Edge& e = graph.edges[j];
        if (e.tail < 0 || e.tail >= graph.vertex_count || e.head < 0 ||
            e.head >= graph.vertex_count)
            throw std::invalid_argument("graph: edge " + std::to_string(j) +
                                        " has a vertex index out of range");
        if (e.tail == e.head)
            throw std::invalid_argument("graph: edge " + std::to_string(j) +
                                        " is a self-loop");
        if (!seen.insert({e.tail, e.head}).second)
            throw std::invalid_argument("graph: duplicate edge (" +
                                        std::to_string(e.tail) + ", " +
                                        std::to_string(e.head) + ")");
    }
    for (std::size_t p = 0; p < graph.plaquettes.size(); ++p) {
        if (graph.plaquettes[p].empty())
            throw std::invalid_argument("graph: plaquette " + std::to_string(p) +
                                        " is empty");
        for (const SignedEdge& se : graph.plaquettes[p]) {
            if (se.edge < 0 || se.edge >= static_cast<int>(graph.edges.size()))
                throw std::invalid_argument("graph: plaquette " + std::to_string(p) +
                                            " references a missing edge");
            if (se.sign != 1 && se.sign != -1)
                throw std::invalid_argument("graph: plaquette " + std::to_string(p) +
                                            " has a sign outside {-1, +1}");
        }
    }
}

LadderComplex build_canonical_ladder(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument(
            "build_canonical_ladder: vertex count must be an even integer >= 4, got " +
            std::to_string(n));

    LadderComplex ladder;
    ladder.n = n;
    OrientedGraph& g = ladder.base;
    g.vertex_count = n;
    const int m = n / 2;  // vertices per rail

    // rail 1: v_k -> v_{k+1}
    for (int k = 0; k + 1 < m; ++k) {
        g.edges.push_back({k, k + 1});
        ladder.edge_role.push_back(EdgeRole::TemporalRail1);
    }
    // rail 2: v_{m+k} -> v_{m+k+1}
    for (int k = 0; k + 1 < m; ++k) {
        g.edges.push_back({m + k, m + k + 1});
        ladder.edge_role.push_back(EdgeRole::TemporalRail2);
    }
    // rungs: v_k -> v_{m+k}
    for (int k = 0; k < m; ++k) {
        g.edges.push_back({k, m + k});
        ladder.edge_role.push_back(EdgeRole::Spatial);
    }

    // Plaquette k walks rung k, rail-2 edge k, rung k+1 backwards, rail-1
    // edge k backwards: the signed incidences cancel vertex by vertex.
    for (int k = 0; k + 1 < m; ++k) {
        Plaquette p;
        p.push_back({ladder.spatial_edge(k), +1});
        p.push_back({ladder.rail2_edge(k), +1});
        p.push_back({ladder.spatial_edge(k + 1), -1});
        p.push_back({ladder.rail1_edge(k), -1});
        g.plaquettes.push_back(std::move(p));
    }

    validate_graph(g);
    return ladder;
}

OrientedGraph build_figure1_fixture() {
    OrientedGraph g;
    g.vertex_count = 6;
    g.edges = {
        {0, 1},  // e1
        {1, 4},  // e2
        {1, 2},  // e3
        {0, 3},  // e4
        {3, 4},  // e5
        {4, 5},  // e6
        {2, 5},  // e7
    };
    // p1 = e4 + e5 - e2 - e1, p2 = e2 - e3 + e6 - e7
    g.plaquettes = {
        {{3, +1}, {4, +1}, {1, -1}, {0, -1}},
        {{1, +1}, {2, -1}, {5, +1}, {6, -1}},
    };
    validate_graph(g);
    return g;
}

BoundaryOperator boundary1(const OrientedGraph& graph) {
    validate_graph(graph);
    IntMatrix m(static_cast<std::size_t>(graph.vertex_count), graph.edges.size());
    for (std::size_t j = 0; j < graph.edges.size(); ++j) {
        m.at(static_cast<std::size_t>(graph.edges[j].tail), j) = -1;
        m.at(static_cast<std::size_t>(graph.edges[j].head), j) = +1;
    }
    return {m};
}

BoundaryOperator boundary2(const OrientedGraph& graph) {
    validate_graph(graph);
    if (graph.plaquettes.empty())
        throw std::invalid_argument("boundary2: graph has no plaquettes");
    IntMatrix m(graph.edges.size(), graph.plaquettes.size());
    for (std::size_t p = 0; p < graph.plaquettes.size(); ++p)
        for (const SignedEdge& se : graph.plaquettes[p])
            m.at(static_cast<std::size_t>(se.edge), p) += se.sign;
    return {m};
}

namespace {

template <typename T>
std::vector<T> coboundary_impl(const OrientedGraph& graph, std::span<const T> v) {
    if (v.size() != static_cast<std::size_t>(graph.vertex_count))
        throw std::invalid_argument("coboundary_links: vertex vector length mismatch");
    std::vector<T> out(graph.edges.size());
    for (std::size_t j = 0; j < graph.edges.size(); ++j)
        out[j] = v[static_cast<std::size_t>(graph.edges[j].head)] -
                 v[static_cast<std::size_t>(graph.edges[j].tail)];
    return out;
}

template <typename T>
std::vector<T> apply_boundary1_impl(const OrientedGraph& graph, std::span<const T> e) {
    if (e.size() != graph.edges.size())
        throw std::invalid_argument("apply_boundary1: edge vector length mismatch");
    std::vector<T> out(static_cast<std::size_t>(graph.vertex_count), T{});
    for (std::size_t j = 0; j < graph.edges.size(); ++j) {
        out[static_cast<std::size_t>(graph.edges[j].tail)] -= e[j];
        out[static_cast<std::size_t>(graph.edges[j].head)] += e[j];
    }
    return out;
}

}  // namespace

std::vector<double> coboundary_links(const OrientedGraph& graph,
                                     std::span<const double> vertex_values) {
    return coboundary_impl(graph, vertex_values);
}

std::vector<std::int64_t> coboundary_links(const OrientedGraph& graph,
                                           std::span<const std::int64_t> vertex_values) {
    return coboundary_impl(graph, vertex_values);
}

std::vector<double> apply_boundary1(const OrientedGraph& graph,
                                    std::span<const double> edge_values) {
    return apply_boundary1_impl(graph, edge_values);
}

std::vector<std::int64_t> apply_boundary1(const OrientedGraph& graph,
                                          std::span<const std::int64_t> edge_values) {
    return apply_boundary1_impl(graph, edge_values);
}

BoundaryProductReport verify_boundary_of_boundary(const OrientedGraph& graph) {
    validate_graph(graph);
    if (graph.plaquettes.empty())
        throw std::invalid_argument("verify_boundary_of_boundary: graph has no plaquettes");
    const IntMatrix product = boundary1(graph).entries * boundary2(graph).entries;
    return {product.is_zero(), product.max_abs()};
}

}  // namespace ladderamp
