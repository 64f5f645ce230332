#include "netsparse/oracle.hpp"

#include "netsparse/io.hpp"
#include "netsparse/properties.hpp"

#include "doctest.h"
#include "testutil.hpp"

using namespace netsparse;
using testutil::communities_of;
using testutil::graph_of;

namespace {

Graph clique(VertexId n) {
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) edges.push_back(Edge{a, b});
    return Graph(n, std::move(edges));
}

} // namespace

TEST_SUITE_BEGIN("exact solvers");

TEST_CASE("density optimum on a forced triangle") {
    Graph tri = graph_of(3, {{0, 1}, {0, 2}, {1, 2}});
    auto cs = communities_of({{0, 1, 2}});
    auto opt = opt_sparsedens(tri, cs, {1.0}, false);
    CHECK(opt.size() == 3);
}

TEST_CASE("overlapping communities can share one edge") {
    Graph g = clique(4);
    auto cs = communities_of({{0, 1, 2}, {0, 1, 3}});
    // alpha 0.1 needs one edge in each; (0,1) serves both
    auto opt = opt_sparsedens(g, cs, {0.1, 0.1}, false);
    CHECK(opt == std::vector<Edge>{{0, 1}});
    CHECK(opt == opt_sparsedens_scan(g, cs, {0.1, 0.1}, false));
}

TEST_CASE("unreachable density targets are infeasible") {
    Graph g = graph_of(3, {{0, 1}});
    auto cs = communities_of({{0, 1, 2}});
    CHECK_THROWS_AS(opt_sparsedens(g, cs, {1.0}, false), infeasible_error);
}

TEST_CASE("oversized pools are refused") {
    Graph g = clique(6);
    auto cs = communities_of({{0, 1, 2, 3, 4, 5}});
    OracleBudget tiny;
    tiny.max_candidate_edges = 5;
    CHECK_THROWS_AS(opt_sparsedens(g, cs, {0.5}, false, tiny), budget_error);
}

TEST_CASE("connectivity raises the optimum of a loose target") {
    Graph path = graph_of(3, {{0, 1}, {1, 2}});
    auto cs = communities_of({{0, 1, 2}});
    CHECK(opt_sparsedens(path, cs, {0.0}, false).empty());
    auto with_conn = opt_sparsedens(path, cs, {0.0}, true);
    CHECK(with_conn == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("weighted optimum picks cheap edges") {
    Graph g(3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}}, {5.0, 1.0, 2.0});
    auto cs = communities_of({{0, 1, 2}});
    // one edge suffices; the cheapest is (1,2)
    auto opt = opt_sparsedens(g, cs, {1.0 / 3.0}, false, {}, true);
    CHECK(opt == std::vector<Edge>{{1, 2}});
    // unweighted tie-break instead returns the smallest canonical edge
    CHECK(opt_sparsedens(g, cs, {1.0 / 3.0}, false) ==
          std::vector<Edge>{{0, 1}});
}

TEST_CASE("the two density enumeration strategies agree") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto inst = testutil::brute_forceable_instance(seed);
        if (community_candidate_edges(inst.g0, inst.cs).size() > 16) continue;
        for (bool conn : {false, true}) {
            DensConfig cfg;
            cfg.alpha = 0.5;
            cfg.connectivity = conn;
            auto [kept, run] =
                testutil::filtered_density_input(inst.g0, inst.cs, cfg);
            if (kept.empty()) continue;
            auto a = opt_sparsedens(inst.g0, kept, kept.alphas(), conn);
            auto b = opt_sparsedens_scan(inst.g0, kept, kept.alphas(), conn);
            CHECK(a == b);
        }
    }
}

TEST_CASE("density optima are feasible") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto inst = testutil::brute_forceable_instance(seed);
        if (community_candidate_edges(inst.g0, inst.cs).size() > 16) continue;
        DensConfig cfg;
        cfg.alpha = 0.6;
        auto [kept, run] =
            testutil::filtered_density_input(inst.g0, inst.cs, cfg);
        if (kept.empty()) continue;
        auto opt = opt_sparsedens(inst.g0, kept, kept.alphas(), false);
        Graph gs(inst.g0.vertex_count(), opt);
        for (std::size_t i = 0; i < kept.size(); ++i)
            CHECK(density_satisfied(gs, kept.members(i), kept.alpha(i)));
    }
}

TEST_CASE("star optima on a single community") {
    Graph g = graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    auto cs = communities_of({{0, 1, 2, 3}});
    CHECK(opt_sparsestars(g, cs).size() == 3);
    CHECK(opt_sparsedistars(g, cs).size() == 3);
}

TEST_CASE("two overlapping communities share a star center") {
    Graph g = clique(4);
    auto cs = communities_of({{0, 1, 2}, {0, 1, 3}});
    auto stars = opt_sparsestars(g, cs);
    CHECK(stars.size() == 3);
    CHECK(stars == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    auto arcs = opt_sparsedistars(g, cs);
    CHECK(arcs.size() == 3);
}

TEST_CASE("subset and center-assignment enumerations agree") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto inst = testutil::brute_forceable_instance(seed);
        if (community_candidate_edges(inst.g0, inst.cs).size() > 16) continue;
        CHECK(opt_sparsestars(inst.g0, inst.cs) ==
              opt_sparsestars_centers(inst.g0, inst.cs));
    }
}

TEST_CASE("directed and undirected optima sandwich each other") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto inst = testutil::brute_forceable_instance(seed);
        if (community_candidate_edges(inst.g0, inst.cs).size() > 16) continue;
        std::size_t e = opt_sparsestars(inst.g0, inst.cs).size();
        std::size_t d = opt_sparsedistars(inst.g0, inst.cs).size();
        CHECK(e <= d);
        CHECK(d <= 2 * e);
    }
}

TEST_CASE("star optima satisfy the star property") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto inst = testutil::brute_forceable_instance(seed);
        if (community_candidate_edges(inst.g0, inst.cs).size() > 16) continue;
        Graph gs(inst.g0.vertex_count(), opt_sparsestars(inst.g0, inst.cs));
        for (std::size_t i = 0; i < inst.cs.size(); ++i)
            CHECK(spanning_star_center(gs, inst.cs.members(i)).has_value());
    }
}

TEST_CASE("matching optimum on disjoint and overlapping families") {
    auto disjoint = communities_of({{0, 1}, {2, 3}, {4, 5}});
    CHECK(opt_matching(disjoint).score == 0);

    auto pair = communities_of({{0, 1, 2}, {0, 1, 3}});
    auto m = opt_matching(pair);
    CHECK(m.score == 1);
    CHECK(m.blocks.size() == 1);

    OracleBudget tiny;
    tiny.max_hyperedge_universe = 2;
    CHECK_THROWS_AS(opt_matching(communities_of({{0}, {1}, {2}}), tiny),
                    budget_error);
}

TEST_CASE("matching score accounts exactly for the directed optimum") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto inst = testutil::brute_forceable_instance(seed, true);
        long long total = 0;
        for (std::size_t i = 0; i < inst.cs.size(); ++i)
            total += static_cast<long long>(inst.cs.member_count(i)) - 1;
        auto matching = opt_matching(inst.cs);
        auto arcs = opt_sparsedistars(inst.g0, inst.cs);
        CHECK(total - matching.score ==
              static_cast<long long>(arcs.size()));
    }
}

TEST_CASE("restricted matching matches the directed optimum on sparse graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto inst = testutil::brute_forceable_instance(seed);
        long long total = 0;
        for (std::size_t i = 0; i < inst.cs.size(); ++i)
            total += static_cast<long long>(inst.cs.member_count(i)) - 1;
        auto matching = opt_matching(inst.cs, {}, &inst.g0);
        auto arcs = opt_sparsedistars(inst.g0, inst.cs);
        CHECK(total - matching.score ==
              static_cast<long long>(arcs.size()));
    }
}

TEST_CASE("a zero timeout aborts a large search") {
    // twelve communities all sharing one vertex: the partition space is in
    // the millions, so the deadline fires long before it finishes
    std::vector<std::vector<VertexId>> communities;
    for (VertexId i = 0; i < 12; ++i)
        communities.push_back({0, static_cast<VertexId>(1 + 2 * i),
                               static_cast<VertexId>(2 + 2 * i)});
    CommunitySet cs(communities);
    OracleBudget budget;
    budget.timeout_seconds = 0.0;
    CHECK_THROWS_AS(opt_matching(cs, budget), budget_error);
}

TEST_CASE("exact solvers are deterministic") {
    auto inst = testutil::brute_forceable_instance(4);
    std::vector<double> alphas(inst.cs.size(), 0.5);
    CHECK(opt_sparsedens(inst.g0, inst.cs, alphas, false) ==
          opt_sparsedens(inst.g0, inst.cs, alphas, false));
    CHECK(opt_sparsestars(inst.g0, inst.cs) ==
          opt_sparsestars(inst.g0, inst.cs));
}

TEST_SUITE_END();
