#pragma once

#include <vector>

#include "profilekit/graph.hpp"
#include "profilekit/rational.hpp"

namespace profilekit {

// Open interval ]lo, hi[ on the line; vertex i of the associated graph is
// intervals[i-1]. Overlap is strict: shared endpoints do not touch.
struct OpenInterval {
    Rational lo;
    Rational hi;
};

inline bool intervals_overlap(const OpenInterval & a, const OpenInterval & b)
{
    return a.lo < b.hi && b.lo < a.hi;
}

Graph interval_graph_of(const std::vector<OpenInterval> & intervals);

} // namespace profilekit
