#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "profilekit/colnum.hpp"
#include "profilekit/graph.hpp"
#include "profilekit/interval.hpp"
#include "profilekit/profiles.hpp"
#include "profilekit/treerep.hpp"

namespace profilekit {

// A generated graph together with the target set it was built around, the
// certificate that witnesses its class membership, and the quantities the
// construction is expected to realize. Predictions are re-established by
// brute force in the tests, never trusted.
struct LabeledInstance {
    Graph graph;
    TargetSet target;
    std::optional<TreeRepresentation> decomposition;
    std::optional<Ordering> ordering;
    std::optional<std::vector<OpenInterval>> intervals;
    std::optional<std::vector<int>> circular_order;
    std::optional<BallSet> balls;
    std::map<std::string, long long> params;
    std::map<std::string, long long> predicted;
    std::map<std::string, std::vector<int>> vertex_groups;
    int prescribed_radius = -1;
};

// Clique of size k, one vertex per nonempty subset attached exactly to that
// subset, and a pendant path of the query length on each subset vertex.
LabeledInstance gen_split_gadget(int k, int radius, const Budgets & budgets = {});

// Interval grid with extra intervals inserted behind each middle column
// cell; realizes quadratically many profiles in the target size.
LabeledInstance gen_interval_lb(int radius, int k, const Budgets & budgets = {});

// Two subset gadgets glued onto the interval grid through cliques, pendant
// paths everywhere; chordal.
LabeledInstance gen_chordal_lb(int radius, int k, const Budgets & budgets = {});

// Treelength-2 instance: a path of subset-pair gadgets under apex vertices,
// with pendant paths; comes with a length-2 path decomposition.
LabeledInstance gen_tl2_lb(int radius, int k, const Budgets & budgets = {});

// Subcubic instance realizing every subset of the target as a trace at the
// prescribed radius k + ceil(log2 k) + 1.
LabeledInstance gen_subcubic(int k, const Budgets & budgets = {});

// Random t-tree grown bag by bag, then each edge kept with probability
// keep_permille/1000. The growth order's bags form the width-t certificate.
LabeledInstance gen_random_partial_ktree(int n, int t, int keep_permille, std::uint64_t seed);

// Random triangulation of a convex polygon; the polygon order is the
// certificate.
LabeledInstance gen_random_mop(int n, std::uint64_t seed);

// Random connected interval graph with distinct integer endpoints.
LabeledInstance gen_random_interval(int n, std::uint64_t seed);

// Random balls with small rational radii in d dimensions.
LabeledInstance gen_random_balls(int n, int d, std::uint64_t seed);

int ceil_log2(int k);

} // namespace profilekit
