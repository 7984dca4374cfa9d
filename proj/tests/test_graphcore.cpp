#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "profilekit/oracles.hpp"
#include "profilekit/profiles.hpp"
#include "profilekit/rng.hpp"

using namespace profilekit;
using namespace profilekit::testing;

namespace {

Graph random_graph(int n, int permille, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng.chance(static_cast<std::uint64_t>(permille), 1000))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_SUITE("graphcore")
{
    TEST_CASE("graph construction validates input")
    {
        CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InputError);
        CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), InputError);
        CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 1}}), InputError);
        auto g = path_graph(5);
        CHECK(g.vertex_count() == 5);
        CHECK(g.edge_count() == 4);
        CHECK(g.has_edge(2, 3));
        CHECK(!g.has_edge(1, 3));
    }

    TEST_CASE("truncated distance on paths")
    {
        auto g = path_graph(5);
        CHECK(truncated_distance(g, 1, 3, 5) == 2);
        CHECK(truncated_distance(g, 2, 2, 0) == 0);
        CHECK(truncated_distance(g, 1, 5, 3) == kInfinity);
        CHECK_THROWS_AS(truncated_distance(g, 0, 1, 2), InputError);
        CHECK_THROWS_AS(truncated_distance(g, 1, 2, -1), InputError);
    }

    TEST_CASE("profile of a vertex")
    {
        auto g = path_graph(5);
        auto a = TargetSet::of(g, {1, 5});
        CHECK(profile_of(g, a, 3, 2) == Profile{2, 2});
        CHECK(profile_of(g, a, 1, 2) == Profile{0, kInfinity});
        CHECK(profile_of(g, a, 4, 2) == Profile{kInfinity, 1});
    }

    TEST_CASE("profile complexity on the path")
    {
        auto g = path_graph(5);
        auto a = TargetSet::of(g, {1, 5});
        auto result = profile_complexity(g, a, 2, true);
        CHECK(result.count == 5);
        std::set<Profile> expected = {{0, kInfinity},
                                      {1, kInfinity},
                                      {2, 2},
                                      {kInfinity, 1},
                                      {kInfinity, 0}};
        CHECK(std::set<Profile>(result.witness_profiles.begin(), result.witness_profiles.end()) ==
              expected);
    }

    TEST_CASE("single vertex at radius zero")
    {
        auto g = Graph::from_edges(1, {});
        CHECK(profile_complexity(g, TargetSet::of(g, {1}), 0).count == 1);
    }

    TEST_CASE("neighbourhood complexity")
    {
        auto g = path_graph(5);
        CHECK(neighbourhood_complexity(g, TargetSet::of(g, {1, 5}), 2).count == 3);
        auto k3 = complete_graph(3);
        CHECK(neighbourhood_complexity(k3, TargetSet::of(k3, {1, 2, 3}), 1).count == 1);
    }

    TEST_CASE("profile and neighbourhood agree with the distance-matrix oracle")
    {
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            auto g = random_graph(7, 400, seed);
            Rng rng(seed + 100);
            auto a = TargetSet{rng.sample_subset(7, 1 + static_cast<int>(seed % 3))};
            int r = static_cast<int>(seed % 4);
            CHECK(profile_complexity(g, a, r).count == oracles::pc_oracle(g, a, r));
            CHECK(neighbourhood_complexity(g, a, r).count == oracles::nc_oracle(g, a, r));
        }
    }

    TEST_CASE("maximization over k-subsets, exact")
    {
        auto p3 = path_graph(3);
        CHECK(pc_over_k_sets(p3, 1, 1, MaxMode::Exact).count == 2);
        auto p5 = path_graph(5);
        CHECK(pc_over_k_sets(p5, 2, 4, MaxMode::Exact).count == 5);
        CHECK(pc_over_k_sets(p5, 5, 4, MaxMode::Exact).count == 5); // A = V, r >= diam
        CHECK(nc_over_k_sets(p5, 2, 2, MaxMode::Exact).count == 3);
        auto k3 = complete_graph(3);
        CHECK(nc_over_k_sets(k3, 3, 1, MaxMode::Exact).count == 1);
    }

    TEST_CASE("exact maximization respects the subset budget")
    {
        auto g = path_graph(40);
        Budgets tight;
        tight.exact_subset_cap = 100;
        CHECK_THROWS_AS(pc_over_k_sets(g, 6, 2, MaxMode::Exact, 0, 0, tight), BudgetError);
    }

    TEST_CASE("sampled maximization is a deterministic lower bound")
    {
        auto g = path_graph(12);
        auto first = pc_over_k_sets(g, 3, 2, MaxMode::Sampled, 40, 7);
        auto second = pc_over_k_sets(g, 3, 2, MaxMode::Sampled, 40, 7);
        CHECK(first.count == second.count);
        CHECK(first.witness_set.vertices == second.witness_set.vertices);
        CHECK(first.sampled_lower_bound);
        auto exact = pc_over_k_sets(g, 3, 2, MaxMode::Exact);
        CHECK(first.count <= exact.count);
    }

    TEST_CASE("monotonicity in radius and target size")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto g = random_graph(8, 350, seed);
            Rng rng(seed);
            auto a = TargetSet{rng.sample_subset(8, 3)};
            long long previous = 0;
            for (int r = 0; r <= 4; ++r) {
                long long current = profile_complexity(g, a, r).count;
                CHECK(current >= previous);
                previous = current;
            }
            long long by_k = 0;
            for (int k = 1; k <= 4; ++k) {
                long long current = pc_over_k_sets(g, k, 2, MaxMode::Exact).count;
                CHECK(current >= by_k);
                by_k = current;
            }
        }
    }

    TEST_CASE("profile zero entries mark the target vertex itself")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto g = random_graph(8, 300, seed);
            auto a = TargetSet::of(g, {2, 5, 7});
            auto profiles = profiles_of_all(g, a, 3);
            for (int v = 1; v <= 8; ++v)
                for (std::size_t i = 0; i < a.vertices.size(); ++i)
                    CHECK((profiles[static_cast<std::size_t>(v)][i] == 0) ==
                          (v == a.vertices[i]));
        }
    }

    TEST_CASE("equal profiles give equal traces")
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto g = random_graph(9, 300, seed);
            auto a = TargetSet::of(g, {1, 4, 8});
            auto profiles = profiles_of_all(g, a, 2);
            auto traces = traces_of_all(g, a, 2);
            for (int u = 1; u <= 9; ++u)
                for (int v = u + 1; v <= 9; ++v)
                    if (profiles[static_cast<std::size_t>(u)] == profiles[static_cast<std::size_t>(v)])
                        CHECK(traces[static_cast<std::size_t>(u)] == traces[static_cast<std::size_t>(v)]);
        }
    }

    TEST_CASE("instance inequality nc <= pc + 1")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            auto g = random_graph(8, 250 + 50 * static_cast<int>(seed % 5), seed);
            Rng rng(seed * 31 + 1);
            auto a = TargetSet{rng.sample_subset(8, 1 + static_cast<int>(seed % 4))};
            int r = static_cast<int>(seed % 4);
            CHECK(neighbourhood_complexity(g, a, r).count <=
                  profile_complexity(g, a, r).count + 1);
        }
    }

    TEST_CASE("diameter")
    {
        CHECK(diameter(path_graph(5)) == 4);
        CHECK(diameter(complete_graph(4)) == 1);
        CHECK(diameter(Graph::from_edges(2, {})) == kInfinity);
    }

    TEST_CASE("resolving sets")
    {
        CHECK(is_resolving(path_graph(5), TargetSet::of(path_graph(5), {1})));
        auto k3 = complete_graph(3);
        CHECK(!is_resolving(k3, TargetSet::of(k3, {1})));
        auto c4 = cycle_graph(4);
        CHECK(is_resolving(c4, TargetSet::of(c4, {1, 2})));
        CHECK_THROWS_AS(is_resolving(Graph::from_edges(2, {}), TargetSet{{1}}), DomainError);
    }

    TEST_CASE("metric dimension by brute force")
    {
        CHECK(metric_dimension(path_graph(2)).dimension == 1);
        CHECK(metric_dimension(path_graph(9)).dimension == 1);
        CHECK(metric_dimension(complete_graph(4)).dimension == 3);
        CHECK(metric_dimension(cycle_graph(5)).dimension == 2);
        auto witness = metric_dimension(cycle_graph(5)).witness;
        CHECK(is_resolving(cycle_graph(5), witness));
        Budgets tight;
        tight.metric_dimension_cap = 5;
        CHECK_THROWS_AS(metric_dimension(path_graph(6), tight), BudgetError);
        CHECK_THROWS_AS(metric_dimension(Graph::from_edges(3, {{1, 2}})), DomainError);
    }
}
