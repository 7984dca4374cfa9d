#pragma once

#include <functional>
#include <set>
#include <vector>

#include "profilekit/colnum.hpp"
#include "profilekit/graph.hpp"
#include "profilekit/guarding.hpp"
#include "profilekit/treerep.hpp"

namespace profilekit::oracles {

// Reference implementations on a different algorithmic route than the
// library code they check: exhaustive path enumeration instead of pruned
// searches, Floyd-Warshall instead of BFS, fixpoint iteration instead of
// one-shot closure. Only usable at toy sizes.

// All simple paths starting at v with at most max_length edges, the trivial
// path included.
void foreach_simple_path(const Graph & g, int v, int max_length,
                         const std::function<void(const std::vector<int> &)> & visit);

std::vector<int> wreach_oracle(const Graph & g, const Ordering & ord, int v, int radius);
std::vector<int> sreach_oracle(const Graph & g, const Ordering & ord, int v, int radius);

// Guarding by the definition: some member intersects every enumerated path
// from v to a target endpoint.
bool guarding_oracle(const Graph & g, const TargetSet & a_set, int radius,
                     const GuardingFamily & family);

std::vector<std::vector<int>> floyd_distances(const Graph & g);

// Distinct truncated profiles via the Floyd matrix, all-infinite excluded.
std::set<std::vector<int>> profile_set_oracle(const Graph & g, const TargetSet & a_set, int radius);
long long pc_oracle(const Graph & g, const TargetSet & a_set, int radius);
long long nc_oracle(const Graph & g, const TargetSet & a_set, int radius);

// Pairwise-LCA fixpoint.
std::vector<int> lca_closure_oracle(const RootedTree & tree, const std::vector<int> & m);

} // namespace profilekit::oracles
