#pragma once

#include <vector>

#include "profilekit/graph.hpp"

namespace profilekit {

// Family of vertex sets claimed to (r,p)-guard a target set: every vertex of
// the graph must have a member that intersects each of its paths of length
// at most r to the target. Members are sorted and deduplicated.
struct GuardingFamily {
    std::vector<std::vector<int>> sets;
    int radius = 0;
    int member_cap = 0; // the p of (r,p)-guarding
    TargetSet target;
};

} // namespace profilekit
