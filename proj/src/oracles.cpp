#include "profilekit/oracles.hpp"

#include <algorithm>

namespace profilekit::oracles {

void foreach_simple_path(const Graph & g, int v, int max_length,
                         const std::function<void(const std::vector<int> &)> & visit)
{
    g.check_vertex(v);
    std::vector<int> path{v};
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    used[static_cast<std::size_t>(v)] = 1;
    std::function<void()> extend = [&]() {
        visit(path);
        if (static_cast<int>(path.size()) - 1 >= max_length)
            return;
        for (int w : g.neighbours(path.back())) {
            if (used[static_cast<std::size_t>(w)])
                continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            extend();
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    extend();
}

std::vector<int> wreach_oracle(const Graph & g, const Ordering & ord, int v, int radius)
{
    std::set<int> reach;
    foreach_simple_path(g, v, radius, [&](const std::vector<int> & path) {
        int endpoint = path.back();
        for (int w : path)
            if (ord.rank(w) < ord.rank(endpoint))
                return;
        reach.insert(endpoint);
    });
    return {reach.begin(), reach.end()};
}

std::vector<int> sreach_oracle(const Graph & g, const Ordering & ord, int v, int radius)
{
    std::set<int> reach;
    foreach_simple_path(g, v, radius, [&](const std::vector<int> & path) {
        int endpoint = path.back();
        for (int w : path)
            if (ord.rank(w) < ord.rank(endpoint))
                return;
        for (int w : path)
            if (w != endpoint && ord.rank(w) < ord.rank(v))
                return;
        reach.insert(endpoint);
    });
    return {reach.begin(), reach.end()};
}

bool guarding_oracle(const Graph & g, const TargetSet & a_set, int radius,
                     const GuardingFamily & family)
{
    std::vector<char> in_target(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int a : a_set.vertices)
        in_target[static_cast<std::size_t>(a)] = 1;

    for (int v = 1; v <= g.vertex_count(); ++v) {
        std::vector<std::vector<int>> paths;
        foreach_simple_path(g, v, radius, [&](const std::vector<int> & path) {
            if (in_target[static_cast<std::size_t>(path.back())])
                paths.push_back(path);
        });
        if (paths.empty())
            continue;
        bool covered = false;
        for (const auto & member : family.sets) {
            std::vector<char> in_member(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
            for (int s : member)
                in_member[static_cast<std::size_t>(s)] = 1;
            bool hits_all = true;
            for (const auto & path : paths) {
                bool hit = false;
                for (int w : path)
                    if (in_member[static_cast<std::size_t>(w)]) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    hits_all = false;
                    break;
                }
            }
            if (hits_all) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

std::vector<std::vector<int>> floyd_distances(const Graph & g)
{
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n) + 1,
                                       std::vector<int>(static_cast<std::size_t>(n) + 1, kInfinity));
    for (int v = 1; v <= n; ++v)
        dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    for (auto [u, v] : g.edges()) {
        dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= n; ++i) {
            if (dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == kInfinity)
                continue;
            for (int j = 1; j <= n; ++j) {
                if (dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] == kInfinity)
                    continue;
                int through = dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                              dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (through < dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = through;
            }
        }
    return dist;
}

std::set<std::vector<int>> profile_set_oracle(const Graph & g, const TargetSet & a_set, int radius)
{
    auto dist = floyd_distances(g);
    std::set<std::vector<int>> profiles;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        std::vector<int> profile;
        bool all_infinite = true;
        for (int a : a_set.vertices) {
            int d = dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)];
            if (d > radius)
                d = kInfinity;
            else
                all_infinite = false;
            profile.push_back(d);
        }
        if (!all_infinite)
            profiles.insert(profile);
    }
    return profiles;
}

long long pc_oracle(const Graph & g, const TargetSet & a_set, int radius)
{
    return static_cast<long long>(profile_set_oracle(g, a_set, radius).size());
}

long long nc_oracle(const Graph & g, const TargetSet & a_set, int radius)
{
    auto dist = floyd_distances(g);
    std::set<std::vector<int>> traces;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        std::vector<int> trace;
        for (int a : a_set.vertices)
            if (dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(v)] <= radius)
                trace.push_back(a);
        traces.insert(trace);
    }
    return static_cast<long long>(traces.size());
}

std::vector<int> lca_closure_oracle(const RootedTree & tree, const std::vector<int> & m)
{
    std::set<int> closure(m.begin(), m.end());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> current(closure.begin(), closure.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i; j < current.size(); ++j)
                if (closure.insert(tree.lca(current[i], current[j])).second)
                    changed = true;
    }
    return {closure.begin(), closure.end()};
}

} // namespace profilekit::oracles
