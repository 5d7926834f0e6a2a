#include <doctest.h>

#include <algorithm>
#include <set>
#include <span>
#include <vector>

#include "ladderamp/graph.hpp"

#include "support/fixture_matrices.hpp"
#include "support/oracles.hpp"

using namespace ladderamp;

TEST_CASE("canonical ladder sizes") {
    const LadderComplex six = build_canonical_ladder(6);
    CHECK(six.base.vertex_count == 6);
    CHECK(six.base.edges.size() == 7);
    CHECK(six.base.plaquettes.size() == 2);

    const LadderComplex four = build_canonical_ladder(4);
    CHECK(four.base.vertex_count == 4);
    CHECK(four.base.edges.size() == 4);
    CHECK(four.base.plaquettes.size() == 1);

    const LadderComplex hundred = build_canonical_ladder(100);
    CHECK(hundred.base.vertex_count == 100);
    CHECK(hundred.base.edges.size() == 148);
    CHECK(hundred.base.plaquettes.size() == 49);
}

TEST_CASE("canonical ladder rejects bad sizes") {
    CHECK_THROWS_AS(build_canonical_ladder(5), std::invalid_argument);
    CHECK_THROWS_AS(build_canonical_ladder(2), std::invalid_argument);
    CHECK_THROWS_AS(build_canonical_ladder(0), std::invalid_argument);
    CHECK_THROWS_AS(build_canonical_ladder(-6), std::invalid_argument);
}

TEST_CASE("fixture boundary operators match the frozen matrices") {
    const OrientedGraph g = build_figure1_fixture();
    CHECK(boundary1(g).entries == fixture::boundary1_expected());
    CHECK(boundary2(g).entries == fixture::boundary2_expected());
}

TEST_CASE("fixture is a relabeling of the canonical six-vertex ladder") {
    const OrientedGraph g = build_figure1_fixture();
    const LadderComplex canonical = build_canonical_ladder(6);

    std::set<std::pair<int, int>> canonical_edges;
    for (const Edge& e : canonical.base.edges) canonical_edges.insert({e.tail, e.head});

    // exhaustive search over all 6! vertex relabelings
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    bool found = false;
    do {
        std::set<std::pair<int, int>> mapped;
        for (const Edge& e : g.edges)
            mapped.insert({perm[static_cast<std::size_t>(e.tail)],
                           perm[static_cast<std::size_t>(e.head)]});
        if (mapped == canonical_edges) {
            found = true;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(found);
}

TEST_CASE("boundary1 columns sum to zero") {
    const BoundaryOperator b1 = boundary1(build_canonical_ladder(4).base);
    for (std::size_t j = 0; j < b1.cols(); ++j) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < b1.rows(); ++i) sum += b1.entries.at(i, j);
        CHECK(sum == 0);
    }
}

TEST_CASE("boundary1 rank equals vertices minus components") {
    auto check_rank = [](const OrientedGraph& g) {
        const std::size_t rank = oracles::integer_rank(boundary1(g).entries);
        const int components = oracles::connected_components(g);
        CHECK(rank == static_cast<std::size_t>(g.vertex_count - components));
    };

    check_rank(build_figure1_fixture());
    check_rank(build_canonical_ladder(4).base);
    check_rank(build_canonical_ladder(6).base);
    check_rank(build_canonical_ladder(10).base);

    // two disjoint triangles-ish pieces: 6 vertices, 2 components
    OrientedGraph disconnected;
    disconnected.vertex_count = 6;
    disconnected.edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}};
    check_rank(disconnected);
}

TEST_CASE("boundary2 shapes and composite boundary") {
    const BoundaryOperator single = boundary2(build_canonical_ladder(4).base);
    CHECK(single.rows() == 4);
    CHECK(single.cols() == 1);
    int nonzero = 0;
    for (std::size_t i = 0; i < single.rows(); ++i)
        if (single.entries.at(i, 0) != 0) ++nonzero;
    CHECK(nonzero == 4);

    const OrientedGraph eight = build_canonical_ladder(8).base;
    CHECK((boundary1(eight).entries * boundary2(eight).entries).is_zero());
}

TEST_CASE("boundary2 requires plaquettes") {
    OrientedGraph bare;
    bare.vertex_count = 3;
    bare.edges = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(boundary2(bare), std::invalid_argument);
}

TEST_CASE("coboundary of vertex values") {
    const OrientedGraph g = build_figure1_fixture();
    const std::vector<double> v{3.0, 5.0, -1.0, 2.0, 7.0, 0.5};
    const std::vector<double> e = coboundary_links(g, std::span<const double>(v));
    CHECK(e[0] == v[1] - v[0]);  // first edge runs vertex 0 -> vertex 1

    const std::vector<double> constant(6, 4.25);
    for (double x : coboundary_links(g, std::span<const double>(constant))) CHECK(x == 0.0);

    const LadderComplex six = build_canonical_ladder(6);
    const std::vector<double> ramp{0, 1, 2, 0, 1, 2};
    const std::vector<double> links = coboundary_links(six.base, std::span<const double>(ramp));
    for (int k = 0; k < six.temporal_per_rail(); ++k) {
        CHECK(links[static_cast<std::size_t>(six.rail1_edge(k))] == 1.0);
        CHECK(links[static_cast<std::size_t>(six.rail2_edge(k))] == 1.0);
    }
    for (int k = 0; k < six.spatial_count(); ++k)
        CHECK(links[static_cast<std::size_t>(six.spatial_edge(k))] == 0.0);

    const std::vector<double> wrong{1.0, 2.0};
    CHECK_THROWS_AS(coboundary_links(g, std::span<const double>(wrong)),
                    std::invalid_argument);
}

TEST_CASE("coboundary ignores constant shifts exactly") {
    oracles::TestRng rng(2024);
    const OrientedGraph g = build_canonical_ladder(10).base;
    std::vector<double> v(10);
    for (double& x : v) x = static_cast<double>(rng.uniform_int(-50, 50));
    std::vector<double> shifted = v;
    for (double& x : shifted) x += 17.0;
    const auto a = coboundary_links(g, std::span<const double>(v));
    const auto b = coboundary_links(g, std::span<const double>(shifted));
    CHECK(a == b);
}

TEST_CASE("composite boundary vanishes, and sign flips are caught") {
    CHECK(verify_boundary_of_boundary(build_figure1_fixture()).is_zero);
    for (int n : {4, 6, 8, 10})
        CHECK(verify_boundary_of_boundary(build_canonical_ladder(n).base).is_zero);

    OrientedGraph mutated = build_figure1_fixture();
    mutated.plaquettes[0][2].sign = -mutated.plaquettes[0][2].sign;
    const BoundaryProductReport report = verify_boundary_of_boundary(mutated);
    CHECK_FALSE(report.is_zero);
    CHECK(report.max_abs_entry > 0);
}

TEST_CASE("graph validation rejects malformed input") {
    OrientedGraph g;
    g.vertex_count = 3;
    g.edges = {{0, 1}, {1, 2}};

    OrientedGraph loop = g;
    loop.edges.push_back({2, 2});
    CHECK_THROWS_AS(validate_graph(loop), std::invalid_argument);

    OrientedGraph duplicate = g;
    duplicate.edges.push_back({0, 1});
    CHECK_THROWS_AS(validate_graph(duplicate), std::invalid_argument);

    OrientedGraph out_of_range = g;
    out_of_range.edges.push_back({0, 3});
    CHECK_THROWS_AS(validate_graph(out_of_range), std::invalid_argument);

    OrientedGraph bad_sign = g;
    bad_sign.plaquettes = {{{0, 2}}};
    CHECK_THROWS_AS(validate_graph(bad_sign), std::invalid_argument);
}

TEST_CASE("ladder role indexing partitions the edge list") {
    const LadderComplex ladder = build_canonical_ladder(12);
    CHECK(static_cast<int>(ladder.edge_role.size()) == ladder.edge_count());
    for (int k = 0; k < ladder.temporal_per_rail(); ++k) {
        CHECK(ladder.edge_role[static_cast<std::size_t>(ladder.rail1_edge(k))] ==
              EdgeRole::TemporalRail1);
        CHECK(ladder.edge_role[static_cast<std::size_t>(ladder.rail2_edge(k))] ==
              EdgeRole::TemporalRail2);
    }
    for (int k = 0; k < ladder.spatial_count(); ++k)
        CHECK(ladder.edge_role[static_cast<std::size_t>(ladder.spatial_edge(k))] ==
              EdgeRole::Spatial);
}
