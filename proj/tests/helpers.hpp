#pragma once

#include <vector>

#include "profilekit/graph.hpp"

namespace profilekit::testing {

inline Graph path_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

inline Graph star_graph(int leaves)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 2; i <= leaves + 1; ++i)
        edges.emplace_back(1, i);
    return Graph::from_edges(leaves + 1, edges);
}

} // namespace profilekit::testing
