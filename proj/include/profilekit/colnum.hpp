#pragma once

#include <vector>

#include "profilekit/graph.hpp"
#include "profilekit/guarding.hpp"
#include "profilekit/rational.hpp"

namespace profilekit {

// Linear vertex ordering; position[v] is the rank of v, smaller = earlier.
struct Ordering {
    std::vector<int> position; // index 0 unused

    static Ordering identity(int n);
    // order[i] is the (i+1)-th vertex; must be a permutation of 1..n.
    static Ordering from_sequence(int n, const std::vector<int> & order);
    std::vector<int> sequence() const;
    void check(const Graph & g) const;
    int rank(int v) const { return position[static_cast<std::size_t>(v)]; }
};

// Weakly r-reachable vertices from every vertex at once: u lands in
// wreach[v] when some uv-path of length at most r has u as its smallest
// vertex. One truncated search per candidate minimum.
std::vector<std::vector<int>> wreach_all(const Graph & g, const Ordering & ord, int radius);

// Strong variant: the path must stay at or above v outside u itself.
std::vector<std::vector<int>> sreach_all(const Graph & g, const Ordering & ord, int radius);

std::vector<int> wreach(const Graph & g, const Ordering & ord, int v, int radius);
std::vector<int> sreach(const Graph & g, const Ordering & ord, int v, int radius);

int wcol_of(const Graph & g, const Ordering & ord, int radius);
int scol_of(const Graph & g, const Ordering & ord, int radius);

// Guarding family {SReach_2r[b] : b weakly r-reachable from the target}.
// Size at most wcol_r * |A|; members at most scol_2r.
GuardingFamily colnum_guarding_family(const Graph & g, const Ordering & ord,
                                      const TargetSet & a_set, int radius);

// Repeated minimum-degree removal, ties to the smallest id; the reverse
// removal order is returned so core vertices come first.
Ordering degeneracy_ordering(const Graph & g);

struct Ball {
    int id = 0;
    std::vector<Rational> center;
    Rational radius;
};

struct BallSet {
    int dimension = 1;
    std::vector<Ball> balls;

    // Validates dimension, positive radii, and ids being exactly 1..n so the
    // set maps onto graph vertices.
    static BallSet of(int dimension, std::vector<Ball> balls);
    int size() const { return static_cast<int>(balls.size()); }
    const Ball & by_id(int id) const { return balls[static_cast<std::size_t>(id) - 1]; }
};

// Closed balls: tangency counts as an edge. Exact rational arithmetic on
// squared distances.
Graph ball_intersection_graph(const BallSet & bs);

// Nonincreasing radius, ties by id.
Ordering diameter_ordering(const BallSet & bs);

struct ThinnessResult {
    long long value = 0;
    bool exact = false; // exact only in dimension 1
};

// Maximum number of ball interiors covering a common point. Exact sweep in
// dimension 1; a certified lower bound from candidate points otherwise.
ThinnessResult thinness(const BallSet & bs);

} // namespace profilekit
