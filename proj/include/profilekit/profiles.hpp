#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "profilekit/graph.hpp"

namespace profilekit {

// Vector of r-truncated distances from one vertex to the target set, indexed
// by the target's fixed order. Entries are 0..r or kInfinity.
using Profile = std::vector<int>;

struct ComplexityResult {
    long long count = 0;
    std::vector<Profile> witness_profiles;
    TargetSet witness_set;
    // Set when the value came from sampling k-subsets: the count is then only
    // a lower bound on the true maximum.
    bool sampled_lower_bound = false;
};

struct Budgets {
    long long exact_subset_cap = 1'000'000;
    int metric_dimension_cap = 16;
    int construction_k_cap = 10;
    int subcubic_k_cap = 4;
};

Profile profile_of(const Graph & g, const TargetSet & a_set, int v, int radius);

// All profiles at once, one BFS per target vertex. profiles[v] is the
// profile of v; index 0 is unused.
std::vector<Profile> profiles_of_all(const Graph & g, const TargetSet & a_set, int radius);

bool is_all_infinite(const Profile & p);

// Number of distinct r-profiles realized over V(G), the all-infinite profile
// excluded.
ComplexityResult profile_complexity(const Graph & g, const TargetSet & a_set, int radius,
                                    bool want_witnesses = false);

// Traces N_r[v] ∩ A, as sorted index lists into the target order. The empty
// trace counts when realized.
std::vector<std::vector<int>> traces_of_all(const Graph & g, const TargetSet & a_set, int radius);

ComplexityResult neighbourhood_complexity(const Graph & g, const TargetSet & a_set, int radius);

enum class MaxMode { Exact, Sampled };

ComplexityResult pc_over_k_sets(const Graph & g, int k, int radius, MaxMode mode,
                                long long samples = 0, std::uint64_t seed = 0,
                                const Budgets & budgets = {});

ComplexityResult nc_over_k_sets(const Graph & g, int k, int radius, MaxMode mode,
                                long long samples = 0, std::uint64_t seed = 0,
                                const Budgets & budgets = {});

// kInfinity when disconnected.
int diameter(const Graph & g);

bool is_resolving(const Graph & g, const TargetSet & s);

struct MetricDimensionResult {
    int dimension = 0;
    TargetSet witness;
};

// Brute force by increasing subset size; requires a connected graph with at
// most budgets.metric_dimension_cap vertices.
MetricDimensionResult metric_dimension(const Graph & g, const Budgets & budgets = {});

} // namespace profilekit
