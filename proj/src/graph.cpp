#include "profilekit/graph.hpp"

#include <algorithm>
#include <deque>

namespace profilekit {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> & edges)
{
    if (n < 0)
        throw InputError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    g.m_ = 0;
    for (int v = 1; v <= n; ++v) {
        auto & nb = g.adj_[static_cast<std::size_t>(v)];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw InputError("duplicate edge at vertex " + std::to_string(v));
        g.m_ += static_cast<long long>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

bool Graph::has_edge(int u, int v) const
{
    const auto & nb = neighbours(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 1; u <= n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph & g, int source, int radius)
{
    return bfs_distances_multi(g, {source}, radius);
}

std::vector<int> bfs_distances_multi(const Graph & g, const std::vector<int> & sources, int radius)
{
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) + 1, kInfinity);
    std::deque<int> queue;
    for (int s : sources) {
        g.check_vertex(s);
        if (dist[static_cast<std::size_t>(s)] != 0) {
            dist[static_cast<std::size_t>(s)] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        int du = dist[static_cast<std::size_t>(u)];
        if (radius >= 0 && du >= radius)
            continue;
        for (int w : g.neighbours(u)) {
            if (dist[static_cast<std::size_t>(w)] == kInfinity) {
                dist[static_cast<std::size_t>(w)] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int truncated_distance(const Graph & g, int u, int v, int radius)
{
    g.check_vertex(u);
    g.check_vertex(v);
    if (radius < 0)
        throw InputError("radius must be nonnegative");
    auto dist = bfs_distances(g, u, radius);
    return dist[static_cast<std::size_t>(v)];
}

bool is_connected(const Graph & g)
{
    if (g.vertex_count() <= 1)
        return true;
    auto dist = bfs_distances(g, 1);
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (dist[static_cast<std::size_t>(v)] == kInfinity)
            return false;
    return true;
}

TargetSet TargetSet::of(const Graph & g, std::vector<int> vertices)
{
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("target set contains duplicate vertices");
    for (int v : vertices)
        g.check_vertex(v);
    return TargetSet{std::move(vertices)};
}

bool TargetSet::contains(int v) const
{
    for (int a : vertices)
        if (a == v)
            return true;
    return false;
}

} // namespace profilekit
