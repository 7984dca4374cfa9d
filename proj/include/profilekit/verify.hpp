#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "profilekit/bigint.hpp"
#include "profilekit/graph.hpp"
#include "profilekit/guarding.hpp"
#include "profilekit/interval.hpp"
#include "profilekit/profiles.hpp"

namespace profilekit {

struct GuardingCounterexample {
    int vertex = 0;
    int target = 0;
    std::vector<int> path; // from vertex to target, avoiding the best member
};

struct GuardingReport {
    bool ok = false;
    std::optional<GuardingCounterexample> counterexample;
    std::vector<std::size_t> cap_violations; // member indices larger than the cap
};

// Deletion-based guarding check: a member covers v when v lies inside it or
// when, after deleting the member, no target vertex outside it stays within
// the radius. Equivalent to intersecting every short path.
GuardingReport verify_guarding(const Graph & g, const TargetSet & a_set, int radius,
                               const GuardingFamily & family);

struct SignatureResult {
    // Sweep chains per target: strictly decreasing left-endpoint chain and
    // strictly increasing right-endpoint chain, extremal points included.
    std::vector<std::vector<Rational>> left_chains;
    std::vector<std::vector<Rational>> right_chains;
    std::vector<Rational> cut_points; // sorted union of all chains
    // Per vertex: part index of its left and right endpoint in the partition
    // induced by cut_points (even = gap, odd = exactly on a point).
    std::vector<std::pair<int, int>> signatures; // index 0 unused
};

// Requires the certificate to reproduce g under open-interval overlap.
SignatureResult interval_signatures(const Graph & g, const std::vector<OpenInterval> & intervals,
                                    const TargetSet & a_set, int radius);

struct LevelsReport {
    std::vector<std::vector<int>> levels;      // levels[i] = vertices at distance i from a1
    std::vector<std::vector<int>> level_targets; // targets of A \ {a1} whose r-ball meets the level
    bool monotone = true;
    std::optional<std::array<int, 3>> violation; // (a, u, v) with dist(a,u) > dist(a,v)
    long long sum_level_targets = 0;
    long long sum_bound = 0; // (2r+1)|A|
    bool sum_ok = true;
};

// Distance levels from a1 plus the circular-order monotonicity check: on
// each level, distances to a target grow while moving away from its closest
// level vertex in either direction of the cut order.
LevelsReport outerplanar_levels(const Graph & g, const std::vector<int> & circular_order, int a1,
                                const TargetSet & a_set, int radius);

struct CorollaryReport {
    int n = 0;
    int diam = 0;
    int metric_dim = 0;
    BigInt bound;
    bool ok = false;
};

// Order-diameter-dimension corollary: a connected graph fits inside the
// class bound evaluated at r = diameter, k = metric dimension. No +1 slack
// is added: at r = diam no vertex has the all-infinite profile.
CorollaryReport corollary_check(const Graph & g, const std::string & class_name,
                                const std::map<std::string, long long> & extra_params,
                                const Budgets & budgets = {});

} // namespace profilekit
