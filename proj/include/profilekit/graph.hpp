#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "profilekit/error.hpp"

namespace profilekit {

// Distances larger than the query radius (and distances across components)
// are reported as this sentinel.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Simple undirected loopless graph on vertices 1..n with sorted adjacency
// lists. Immutable after construction; safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    // Validates ids, rejects loops and duplicate edges, symmetrizes and
    // sorts the adjacency lists.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>> & edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    const std::vector<int> & neighbours(int v) const
    {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    bool has_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

    void check_vertex(int v) const
    {
        if (v < 1 || v > n_)
            throw InputError("vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_; // index 0 unused
};

// Breadth-first search from `source`, truncated at depth `radius`; entries
// beyond the radius (or in other components) are kInfinity. A negative
// radius means no truncation.
std::vector<int> bfs_distances(const Graph & g, int source, int radius = -1);

// Truncated multi-source variant: distance to the nearest source.
std::vector<int> bfs_distances_multi(const Graph & g, const std::vector<int> & sources, int radius = -1);

int truncated_distance(const Graph & g, int u, int v, int radius);

bool is_connected(const Graph & g);

// The set A whose order fixes profile positions.
struct TargetSet {
    std::vector<int> vertices;

    // Validates ids against g and rejects duplicates.
    static TargetSet of(const Graph & g, std::vector<int> vertices);

    int size() const { return static_cast<int>(vertices.size()); }
    bool contains(int v) const;
};

} // namespace profilekit
