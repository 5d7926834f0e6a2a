#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ladderamp/intmat.hpp"

namespace ladderamp {

// Oriented edge: tail -> head, vertex indices are 0-based.
struct Edge {
    int tail = 0;
    int head = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// One signed incidence of an oriented 2-cell with an edge.
struct SignedEdge {
    int edge = 0;
    int sign = 0;  // +1 or -1
    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

using Plaquette = std::vector<SignedEdge>;

// A graph with oriented edges and oriented plaquettes: the discrete spacetime.
// Builders guarantee that every plaquette closes; graphs assembled by hand are
// checked structurally by validate_graph and topologically by
// verify_boundary_of_boundary.
struct OrientedGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Plaquette> plaquettes;
};

// Throws std::invalid_argument on out-of-range indices, self-loops,
// duplicate edges, or malformed plaquette entries.
void validate_graph(const OrientedGraph& graph);

enum class EdgeRole { TemporalRail1, TemporalRail2, Spatial };

// Two temporal rails of N/2 vertices joined by N/2 spatial rungs.
// Canonical edge order: rail-1 edges, rail-2 edges, then rungs, so the
// closed-form phase decomposition applies to the link vector verbatim.
struct LadderComplex {
    OrientedGraph base;
    int n = 0;                         // vertex count, even, >= 4
    std::vector<EdgeRole> edge_role;   // one entry per edge

    int rail_length() const { return n / 2; }          // vertices per rail
    int temporal_per_rail() const { return n / 2 - 1; }
    int spatial_count() const { return n / 2; }
    int edge_count() const { return 3 * n / 2 - 2; }
    int plaquette_count() const { return n / 2 - 1; }

    // k is 0-based within each role group
    int rail1_edge(int k) const { return k; }
    int rail2_edge(int k) const { return n / 2 - 1 + k; }
    int spatial_edge(int k) const { return n - 2 + k; }
};

// Signed incidence matrix of a chain-space map. For the links->vertices map
// each column carries one -1 (tail) and one +1 (head); for the
// plaquettes->links map each column traces a plaquette boundary.
struct BoundaryOperator {
    IntMatrix entries;
    std::size_t rows() const { return entries.rows(); }
    std::size_t cols() const { return entries.cols(); }
};

// Builds the canonical ladder on n vertices (n even, n >= 4): n vertices,
// 3n/2-2 edges, n/2-1 plaquettes, each plaquette oriented so the composite
// boundary map vanishes identically.
LadderComplex build_canonical_ladder(int n);

// The six-vertex, seven-edge, two-plaquette reference graph whose boundary
// operators are pinned entry-for-entry by the regression tests. Same shape as
// build_canonical_ladder(6) up to an edge relabeling.
OrientedGraph build_figure1_fixture();

// Links -> vertices map: column j has -1 at tail(j), +1 at head(j).
BoundaryOperator boundary1(const OrientedGraph& graph);

// Plaquettes -> links map: column k holds plaquette k's signed incidences.
BoundaryOperator boundary2(const OrientedGraph& graph);

// Edge values induced by vertex values: edge j gets v[head(j)] - v[tail(j)].
std::vector<double> coboundary_links(const OrientedGraph& graph,
                                     std::span<const double> vertex_values);
std::vector<std::int64_t> coboundary_links(const OrientedGraph& graph,
                                           std::span<const std::int64_t> vertex_values);

// Applies the links->vertices map without materializing the matrix.
std::vector<double> apply_boundary1(const OrientedGraph& graph,
                                    std::span<const double> edge_values);
std::vector<std::int64_t> apply_boundary1(const OrientedGraph& graph,
                                          std::span<const std::int64_t> edge_values);

struct BoundaryProductReport {
    bool is_zero = false;
    std::int64_t max_abs_entry = 0;  // of the composite map, exact integers
};

// Checks the composite map links->vertices after plaquettes->links. A nonzero
// product is reported, not thrown.
BoundaryProductReport verify_boundary_of_boundary(const OrientedGraph& graph);

}  // namespace ladderamp
