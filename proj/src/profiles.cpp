#include "profilekit/profiles.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "profilekit/rng.hpp"

namespace profilekit {

namespace {

void require_nonempty(const TargetSet & a_set)
{
    if (a_set.vertices.empty())
        throw InputError("target set must be nonempty");
}

void require_radius(int radius)
{
    if (radius < 0)
        throw InputError("radius must be nonnegative");
}

// C(n,k) clamped at `cap` to avoid overflow while still detecting
// budget violations.
long long binomial_clamped(int n, int k, long long cap)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap)
            return cap + 1;
    }
    return result;
}

template <typename Fn>
void for_each_k_subset(int n, int k, Fn && fn)
{
    std::vector<int> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        subset[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        fn(subset);
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - (k - 1 - i))
            --i;
        if (i < 0)
            break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
}

long long count_for_subset(const Graph & g, const std::vector<int> & subset, int radius, bool use_nc)
{
    TargetSet a{subset};
    if (use_nc)
        return neighbourhood_complexity(g, a, radius).count;
    return profile_complexity(g, a, radius).count;
}

ComplexityResult maximize_over_k_sets(const Graph & g, int k, int radius, MaxMode mode,
                                      long long samples, std::uint64_t seed,
                                      const Budgets & budgets, bool use_nc)
{
    require_radius(radius);
    if (k < 1 || k > g.vertex_count())
        throw InputError("k must be between 1 and n");
    ComplexityResult best;
    best.count = -1;
    if (mode == MaxMode::Exact) {
        long long total = binomial_clamped(g.vertex_count(), k, budgets.exact_subset_cap);
        if (total > budgets.exact_subset_cap)
            throw BudgetError("exact mode needs more than " + std::to_string(budgets.exact_subset_cap) +
                              " subsets (C(" + std::to_string(g.vertex_count()) + "," + std::to_string(k) + "))");
        for_each_k_subset(g.vertex_count(), k, [&](const std::vector<int> & subset) {
            long long c = count_for_subset(g, subset, radius, use_nc);
            if (c > best.count) {
                best.count = c;
                best.witness_set = TargetSet{subset};
            }
        });
    }
    else {
        if (samples < 1)
            throw InputError("sampled mode needs at least one sample");
        Rng rng(seed);
        for (long long i = 0; i < samples; ++i) {
            auto subset = rng.sample_subset(g.vertex_count(), k);
            long long c = count_for_subset(g, subset, radius, use_nc);
            if (c > best.count) {
                best.count = c;
                best.witness_set = TargetSet{subset};
            }
        }
        best.sampled_lower_bound = true;
    }
    return best;
}

} // namespace

std::vector<int> Rng::sample_subset(int n, int k)
{
    // Partial Fisher-Yates over 1..n.
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pool[static_cast<std::size_t>(i)] = i + 1;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

Profile profile_of(const Graph & g, const TargetSet & a_set, int v, int radius)
{
    require_nonempty(a_set);
    require_radius(radius);
    g.check_vertex(v);
    auto dist = bfs_distances(g, v, radius);
    Profile p;
    p.reserve(a_set.vertices.size());
    for (int a : a_set.vertices)
        p.push_back(dist[static_cast<std::size_t>(a)]);
    return p;
}

std::vector<Profile> profiles_of_all(const Graph & g, const TargetSet & a_set, int radius)
{
    require_nonempty(a_set);
    require_radius(radius);
    const int n = g.vertex_count();
    std::vector<Profile> profiles(static_cast<std::size_t>(n) + 1,
                                  Profile(a_set.vertices.size(), kInfinity));
    for (std::size_t i = 0; i < a_set.vertices.size(); ++i) {
        auto dist = bfs_distances(g, a_set.vertices[i], radius);
        for (int v = 1; v <= n; ++v)
            profiles[static_cast<std::size_t>(v)][i] = dist[static_cast<std::size_t>(v)];
    }
    return profiles;
}

bool is_all_infinite(const Profile & p)
{
    for (int e : p)
        if (e != kInfinity)
            return false;
    return true;
}

ComplexityResult profile_complexity(const Graph & g, const TargetSet & a_set, int radius,
                                    bool want_witnesses)
{
    auto profiles = profiles_of_all(g, a_set, radius);
    std::set<Profile> distinct;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const auto & p = profiles[static_cast<std::size_t>(v)];
        if (!is_all_infinite(p))
            distinct.insert(p);
    }
    ComplexityResult result;
    result.count = static_cast<long long>(distinct.size());
    result.witness_set = a_set;
    if (want_witnesses)
        result.witness_profiles.assign(distinct.begin(), distinct.end());
    return result;
}

std::vector<std::vector<int>> traces_of_all(const Graph & g, const TargetSet & a_set, int radius)
{
    auto profiles = profiles_of_all(g, a_set, radius);
    std::vector<std::vector<int>> traces(static_cast<std::size_t>(g.vertex_count()) + 1);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const auto & p = profiles[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != kInfinity)
                traces[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
    }
    return traces;
}

ComplexityResult neighbourhood_complexity(const Graph & g, const TargetSet & a_set, int radius)
{
    auto traces = traces_of_all(g, a_set, radius);
    std::set<std::vector<int>> distinct;
    for (int v = 1; v <= g.vertex_count(); ++v)
        distinct.insert(traces[static_cast<std::size_t>(v)]);
    ComplexityResult result;
    result.count = static_cast<long long>(distinct.size());
    result.witness_set = a_set;
    return result;
}

ComplexityResult pc_over_k_sets(const Graph & g, int k, int radius, MaxMode mode,
                                long long samples, std::uint64_t seed, const Budgets & budgets)
{
    return maximize_over_k_sets(g, k, radius, mode, samples, seed, budgets, false);
}

ComplexityResult nc_over_k_sets(const Graph & g, int k, int radius, MaxMode mode,
                                long long samples, std::uint64_t seed, const Budgets & budgets)
{
    return maximize_over_k_sets(g, k, radius, mode, samples, seed, budgets, true);
}

int diameter(const Graph & g)
{
    int best = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int u = 1; u <= g.vertex_count(); ++u) {
            int d = dist[static_cast<std::size_t>(u)];
            if (d == kInfinity)
                return kInfinity;
            best = std::max(best, d);
        }
    }
    return best;
}

bool is_resolving(const Graph & g, const TargetSet & s)
{
    if (!is_connected(g))
        throw DomainError("resolving sets are defined for connected graphs");
    require_nonempty(s);
    // Radius n exceeds every distance, so the vectors are untruncated.
    auto vectors = profiles_of_all(g, s, g.vertex_count());
    std::set<Profile> distinct;
    for (int v = 1; v <= g.vertex_count(); ++v)
        distinct.insert(vectors[static_cast<std::size_t>(v)]);
    return static_cast<long long>(distinct.size()) == g.vertex_count();
}

MetricDimensionResult metric_dimension(const Graph & g, const Budgets & budgets)
{
    if (!is_connected(g))
        throw DomainError("metric dimension is defined for connected graphs");
    if (g.vertex_count() > budgets.metric_dimension_cap)
        throw BudgetError("metric dimension brute force capped at n = " +
                          std::to_string(budgets.metric_dimension_cap));
    const int n = g.vertex_count();
    if (n == 1)
        return {1, TargetSet{{1}}};

    // Full distance matrix once, then subset checks are table lookups.
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v)
        dist[static_cast<std::size_t>(v)] = bfs_distances(g, v);

    for (int k = 1; k <= n; ++k) {
        MetricDimensionResult found;
        bool ok = false;
        for_each_k_subset(n, k, [&](const std::vector<int> & subset) {
            if (ok)
                return;
            std::set<std::vector<int>> seen;
            for (int v = 1; v <= n; ++v) {
                std::vector<int> vec;
                vec.reserve(subset.size());
                for (int s : subset)
                    vec.push_back(dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)]);
                seen.insert(std::move(vec));
            }
            if (static_cast<int>(seen.size()) == n) {
                ok = true;
                found = {k, TargetSet{subset}};
            }
        });
        if (ok)
            return found;
    }
    throw DomainError("no resolving set found"); // unreachable on connected input
}

} // namespace profilekit
