#include "netsparse/dens.hpp"

#include "netsparse/oracle.hpp"
#include "netsparse/properties.hpp"

#include "doctest.h"
#include "testutil.hpp"

#include <cmath>

using namespace netsparse;
using testutil::communities_of;
using testutil::graph_of;

namespace {

DensConfig uniform(double alpha, bool connectivity = false,
                   bool weighted = false) {
    DensConfig cfg;
    cfg.alpha = alpha;
    cfg.connectivity = connectivity;
    cfg.weighted = weighted;
    return cfg;
}

bool output_feasible(const Graph& g0, const CommunitySet& cs,
                     const DensConfig& cfg, const SparsifyResult& result) {
    Graph gs(g0.vertex_count(), result.edges);
    auto alphas = resolve_alphas(g0, cs, cfg);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!density_satisfied(gs, cs.members(i), alphas[i])) return false;
        if (cfg.connectivity && !connected(gs, cs.members(i))) return false;
    }
    return true;
}

} // namespace

TEST_SUITE_BEGIN("density greedy");

TEST_CASE("a full-density triangle is forced") {
    Graph tri = graph_of(3, {{0, 1}, {0, 2}, {1, 2}});
    auto cs = communities_of({{0, 1, 2}});
    auto result = sparsify_density(tri, cs, uniform(1.0));
    CHECK(result.edges == tri.edges());
    CHECK(result.satisfied == std::vector<std::uint8_t>{1});
}

TEST_CASE("two disjoint communities of unit demand take two edges") {
    Graph g = graph_of(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    auto cs = communities_of({{0, 1, 2}, {3, 4, 5}});
    DensConfig cfg = uniform(1.0 / 3.0); // one edge per triangle
    auto result = sparsify_density(g, cs, cfg);
    CHECK(result.edges.size() == 2);
    auto opt = opt_sparsedens(g, cs, resolve_alphas(g, cs, cfg), false);
    CHECK(opt.size() == 2);
}

TEST_CASE("infeasible communities are reported by index") {
    Graph g = graph_of(4, {{0, 1}, {2, 3}});
    auto cs = communities_of({{0, 1}, {0, 1, 2}});
    try {
        sparsify_density(g, cs, uniform(1.0));
        FAIL("expected infeasibility");
    } catch (const infeasible_error& e) {
        CHECK(e.communities() == std::vector<std::size_t>{1});
    }
}

TEST_CASE("weighted runs prefer short edges at equal gain") {
    Graph g(3, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}}, {5.0, 1.0, 2.0});
    auto cs = communities_of({{0, 1, 2}});
    auto result = sparsify_density(g, cs, uniform(1.0 / 3.0, false, true));
    CHECK(result.edges == std::vector<Edge>{{1, 2}});
    // unweighted tie-break takes the smallest canonical edge instead
    auto plain = sparsify_density(g, cs, uniform(1.0 / 3.0));
    CHECK(plain.edges == std::vector<Edge>{{0, 1}});
}

TEST_CASE("unit-distance weighted runs match unweighted runs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto inst = testutil::varied_instance(seed);
        auto [kept, cfg] =
            testutil::filtered_density_input(inst.g0, inst.cs, uniform(0.6));
        auto plain = sparsify_density(inst.g0, kept, cfg);
        DensConfig weighted_cfg = cfg;
        weighted_cfg.weighted = true;
        auto weighted = sparsify_density(inst.g0, kept, weighted_cfg);
        CHECK(plain.selection_order == weighted.selection_order);
    }
}

TEST_CASE("lazy and naive selection sequences are identical") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto inst = testutil::varied_instance(seed);
        for (bool conn : {false, true}) {
            auto [kept, cfg] = testutil::filtered_density_input(
                inst.g0, inst.cs, uniform(conn ? 0.4 : 0.8, conn));
            auto lazy = sparsify_density(inst.g0, kept, cfg);
            auto naive = sparsify_density_naive(inst.g0, kept, cfg);
            CHECK(lazy.selection_order == naive.selection_order);
        }
    }

    // one larger instance where the stale queue actually earns its keep
    GenConfig big;
    big.seed = 77;
    big.n = 300;
    big.communities = 150;
    big.min_size = 2;
    big.max_size = 6;
    big.overlap = 0.6;
    big.extra_edge_prob = 0.3;
    auto inst = generate_instance(big);
    for (bool weighted : {false, true}) {
        DensConfig cfg;
        cfg.epsilon = 0.6;
        cfg.weighted = weighted;
        auto lazy = sparsify_density(inst.g0, inst.cs, cfg);
        auto naive = sparsify_density_naive(inst.g0, inst.cs, cfg);
        CHECK(lazy.selection_order == naive.selection_order);
    }
}

TEST_CASE("outputs satisfy every community in every mode") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto inst = testutil::varied_instance(seed);
        for (bool conn : {false, true}) {
            auto [kept, cfg] = testutil::filtered_density_input(
                inst.g0, inst.cs, uniform(0.7, conn));
            auto result = sparsify_density(inst.g0, kept, cfg);
            CHECK(output_feasible(inst.g0, kept, cfg, result));
        }
        DensConfig eps;
        eps.epsilon = 0.5; // always feasible: targets scale what is there
        auto result = sparsify_density(inst.g0, inst.cs, eps);
        CHECK(output_feasible(inst.g0, inst.cs, eps, result));
    }
}

TEST_CASE("connectivity-only mode spans every community") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto inst = testutil::varied_instance(seed);
        DensConfig cfg = uniform(0.0, true);
        auto result = sparsify_density(inst.g0, inst.cs, cfg);
        Graph gs(inst.g0.vertex_count(), result.edges);
        for (std::size_t i = 0; i < inst.cs.size(); ++i)
            CHECK(connected(gs, inst.cs.members(i)));
    }
}

TEST_CASE("every selection had strictly positive gain when taken") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto inst = testutil::varied_instance(seed);
        auto [kept, cfg] = testutil::filtered_density_input(
            inst.g0, inst.cs, uniform(0.7, seed % 2 == 0));
        auto result = sparsify_density(inst.g0, kept, cfg);
        PotentialState replay(inst.g0, kept, kept.alphas(), cfg.connectivity);
        for (const Edge& e : result.selection_order) {
            CHECK(replay.marginal_gain(e) > 0);
            replay.insert(e);
        }
        CHECK(replay.total_potential() == 0);
    }
}

TEST_CASE("selections stay within the candidate pool") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto inst = testutil::varied_instance(seed);
        auto [kept, cfg] =
            testutil::filtered_density_input(inst.g0, inst.cs, uniform(0.9));
        auto pool = community_candidate_edges(inst.g0, kept);
        auto result = sparsify_density(inst.g0, kept, cfg);
        for (const Edge& e : result.edges)
            CHECK(std::binary_search(pool.begin(), pool.end(), e));
    }
}

TEST_CASE("greedy size is within the harmonic bound of the optimum") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto inst = testutil::brute_forceable_instance(seed);
        if (community_candidate_edges(inst.g0, inst.cs).size() > 16) continue;
        auto [kept, cfg] =
            testutil::filtered_density_input(inst.g0, inst.cs, uniform(0.6));
        auto greedy = sparsify_density(inst.g0, kept, cfg);
        auto alphas = kept.alphas();
        auto opt = opt_sparsedens(inst.g0, kept, alphas, false);

        PotentialState fresh(inst.g0, kept, alphas, false);
        long long max_gain = 0;
        for (std::size_t idx = 0; idx < fresh.candidate_edges().size(); ++idx)
            max_gain = std::max(max_gain, fresh.marginal_gain(idx));
        double harmonic = 0.0;
        for (long long i = 1; i <= max_gain; ++i)
            harmonic += 1.0 / static_cast<double>(i);
        CHECK(static_cast<double>(greedy.edges.size()) <=
              harmonic * static_cast<double>(opt.size()) + 1e-9);
    }
}

TEST_CASE("runs are deterministic") {
    auto inst = testutil::varied_instance(7);
    auto [kept, cfg] =
        testutil::filtered_density_input(inst.g0, inst.cs, uniform(0.8));
    auto a = sparsify_density(inst.g0, kept, cfg);
    auto b = sparsify_density(inst.g0, kept, cfg);
    CHECK(a.selection_order == b.selection_order);
    CHECK(a.edges == b.edges);
}

TEST_SUITE_END();
