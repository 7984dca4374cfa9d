#include "profilekit/colnum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace profilekit {

Ordering Ordering::identity(int n)
{
    Ordering ord;
    ord.position.resize(static_cast<std::size_t>(n) + 1);
    std::iota(ord.position.begin(), ord.position.end(), 0);
    return ord;
}

Ordering Ordering::from_sequence(int n, const std::vector<int> & order)
{
    if (static_cast<int>(order.size()) != n)
        throw InputError("ordering must list all " + std::to_string(n) + " vertices");
    Ordering ord;
    ord.position.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        if (v < 1 || v > n)
            throw InputError("ordering entry " + std::to_string(v) + " out of range");
        if (ord.position[static_cast<std::size_t>(v)] != 0)
            throw InputError("ordering repeats vertex " + std::to_string(v));
        ord.position[static_cast<std::size_t>(v)] = i + 1;
    }
    return ord;
}

std::vector<int> Ordering::sequence() const
{
    const int n = static_cast<int>(position.size()) - 1;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        order[static_cast<std::size_t>(position[static_cast<std::size_t>(v)]) - 1] = v;
    return order;
}

void Ordering::check(const Graph & g) const
{
    if (static_cast<int>(position.size()) != g.vertex_count() + 1)
        throw InputError("ordering size does not match the graph");
    std::vector<char> seen(position.size(), 0);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        int p = position[static_cast<std::size_t>(v)];
        if (p < 1 || p > g.vertex_count() || seen[static_cast<std::size_t>(p)])
            throw InputError("ordering is not a permutation of 1.." + std::to_string(g.vertex_count()));
        seen[static_cast<std::size_t>(p)] = 1;
    }
}

std::vector<std::vector<int>> wreach_all(const Graph & g, const Ordering & ord, int radius)
{
    ord.check(g);
    if (radius < 0)
        throw InputError("radius must be nonnegative");
    const int n = g.vertex_count();
    std::vector<std::vector<int>> reach(static_cast<std::size_t>(n) + 1);
    std::vector<int> dist(static_cast<std::size_t>(n) + 1);
    for (int u = 1; u <= n; ++u) {
        // Truncated search from u through vertices strictly above u; every
        // vertex it reaches has a path whose minimum is u.
        std::fill(dist.begin(), dist.end(), kInfinity);
        dist[static_cast<std::size_t>(u)] = 0;
        std::deque<int> queue{u};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (dist[static_cast<std::size_t>(x)] >= radius)
                continue;
            for (int w : g.neighbours(x)) {
                if (ord.rank(w) > ord.rank(u) && dist[static_cast<std::size_t>(w)] == kInfinity) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (int v = 1; v <= n; ++v)
            if (dist[static_cast<std::size_t>(v)] != kInfinity)
                reach[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto & r : reach)
        std::sort(r.begin(), r.end());
    return reach;
}

std::vector<std::vector<int>> sreach_all(const Graph & g, const Ordering & ord, int radius)
{
    ord.check(g);
    if (radius < 0)
        throw InputError("radius must be nonnegative");
    const int n = g.vertex_count();
    std::vector<std::vector<int>> reach(static_cast<std::size_t>(n) + 1);
    std::vector<int> dist(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        std::set<int> out{v};
        if (radius >= 1) {
            // Search from v through vertices at or above v, then step down
            // once as the final move.
            std::fill(dist.begin(), dist.end(), kInfinity);
            dist[static_cast<std::size_t>(v)] = 0;
            std::deque<int> queue{v};
            while (!queue.empty()) {
                int x = queue.front();
                queue.pop_front();
                if (dist[static_cast<std::size_t>(x)] > radius - 1)
                    continue;
                for (int w : g.neighbours(x)) {
                    if (ord.rank(w) < ord.rank(v))
                        out.insert(w);
                    else if (dist[static_cast<std::size_t>(w)] == kInfinity &&
                             dist[static_cast<std::size_t>(x)] < radius - 1) {
                        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        reach[static_cast<std::size_t>(v)].assign(out.begin(), out.end());
    }
    return reach;
}

std::vector<int> wreach(const Graph & g, const Ordering & ord, int v, int radius)
{
    g.check_vertex(v);
    return wreach_all(g, ord, radius)[static_cast<std::size_t>(v)];
}

std::vector<int> sreach(const Graph & g, const Ordering & ord, int v, int radius)
{
    g.check_vertex(v);
    return sreach_all(g, ord, radius)[static_cast<std::size_t>(v)];
}

int wcol_of(const Graph & g, const Ordering & ord, int radius)
{
    auto reach = wreach_all(g, ord, radius);
    std::size_t best = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        best = std::max(best, reach[static_cast<std::size_t>(v)].size());
    return static_cast<int>(best);
}

int scol_of(const Graph & g, const Ordering & ord, int radius)
{
    auto reach = sreach_all(g, ord, radius);
    std::size_t best = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        best = std::max(best, reach[static_cast<std::size_t>(v)].size());
    return static_cast<int>(best);
}

GuardingFamily colnum_guarding_family(const Graph & g, const Ordering & ord,
                                      const TargetSet & a_set, int radius)
{
    ord.check(g);
    if (radius < 0)
        throw InputError("radius must be nonnegative");
    auto weak = wreach_all(g, ord, radius);
    std::set<int> base;
    for (int a : a_set.vertices)
        base.insert(weak[static_cast<std::size_t>(a)].begin(), weak[static_cast<std::size_t>(a)].end());

    auto strong = sreach_all(g, ord, 2 * radius);
    std::set<std::vector<int>> sets;
    for (int b : base)
        sets.insert(strong[static_cast<std::size_t>(b)]);

    GuardingFamily family;
    family.sets.assign(sets.begin(), sets.end());
    family.radius = radius;
    family.member_cap = scol_of(g, ord, 2 * radius);
    family.target = a_set;
    return family;
}

Ordering degeneracy_ordering(const Graph & g)
{
    const int n = g.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> removed(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
        degree[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<int> removal;
    removal.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 1; v <= n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (pick == -1 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(pick)]))
                pick = v;
        removed[static_cast<std::size_t>(pick)] = 1;
        removal.push_back(pick);
        for (int w : g.neighbours(pick))
            if (!removed[static_cast<std::size_t>(w)])
                --degree[static_cast<std::size_t>(w)];
    }
    std::reverse(removal.begin(), removal.end());
    return Ordering::from_sequence(n, removal);
}

BallSet BallSet::of(int dimension, std::vector<Ball> balls)
{
    if (dimension < 1)
        throw InputError("dimension must be positive");
    std::vector<char> seen(balls.size() + 1, 0);
    for (const auto & b : balls) {
        if (static_cast<int>(b.center.size()) != dimension)
            throw InputError("ball " + std::to_string(b.id) + " has wrong dimension");
        if (!(b.radius > Rational(0)))
            throw InputError("ball " + std::to_string(b.id) + " has nonpositive radius");
        if (b.id < 1 || b.id > static_cast<int>(balls.size()) || seen[static_cast<std::size_t>(b.id)])
            throw InputError("ball ids must be exactly 1..n");
        seen[static_cast<std::size_t>(b.id)] = 1;
    }
    std::sort(balls.begin(), balls.end(), [](const Ball & a, const Ball & b) { return a.id < b.id; });
    BallSet bs;
    bs.dimension = dimension;
    bs.balls = std::move(balls);
    return bs;
}

namespace {

Rational squared_distance(const Ball & a, const Ball & b)
{
    Rational sum(0);
    for (std::size_t i = 0; i < a.center.size(); ++i) {
        Rational d = a.center[i] - b.center[i];
        sum = sum + d * d;
    }
    return sum;
}

} // namespace

Graph ball_intersection_graph(const BallSet & bs)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= bs.size(); ++i) {
        for (int j = i + 1; j <= bs.size(); ++j) {
            Rational reach = bs.by_id(i).radius + bs.by_id(j).radius;
            if (squared_distance(bs.by_id(i), bs.by_id(j)) <= reach * reach)
                edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(bs.size(), edges);
}

Ordering diameter_ordering(const BallSet & bs)
{
    std::vector<int> ids(static_cast<std::size_t>(bs.size()));
    std::iota(ids.begin(), ids.end(), 1);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (bs.by_id(a).radius != bs.by_id(b).radius)
            return bs.by_id(b).radius < bs.by_id(a).radius;
        return a < b;
    });
    return Ordering::from_sequence(bs.size(), ids);
}

ThinnessResult thinness(const BallSet & bs)
{
    if (bs.size() == 0)
        return {0, true};
    if (bs.dimension == 1) {
        // Sweep the elementary segments between consecutive endpoints; the
        // interior count is constant on each.
        std::vector<Rational> points;
        for (const auto & b : bs.balls) {
            points.push_back(b.center[0] - b.radius);
            points.push_back(b.center[0] + b.radius);
        }
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        long long best = 0;
        for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            Rational mid = (points[i] + points[i + 1]) / Rational(2);
            long long count = 0;
            for (const auto & b : bs.balls)
                if (b.center[0] - b.radius < mid && mid < b.center[0] + b.radius)
                    ++count;
            best = std::max(best, count);
        }
        return {best, true};
    }

    // Candidate points: centers and the tangency point on each pair's
    // center segment. Gives a certified lower bound only.
    std::vector<std::vector<Rational>> candidates;
    for (const auto & b : bs.balls)
        candidates.push_back(b.center);
    for (int i = 1; i <= bs.size(); ++i) {
        for (int j = i + 1; j <= bs.size(); ++j) {
            const Ball & a = bs.by_id(i);
            const Ball & b = bs.by_id(j);
            Rational total = a.radius + b.radius;
            std::vector<Rational> point;
            for (std::size_t c = 0; c < a.center.size(); ++c)
                point.push_back((a.center[c] * b.radius + b.center[c] * a.radius) / total);
            candidates.push_back(std::move(point));
        }
    }
    long long best = 0;
    for (const auto & point : candidates) {
        long long count = 0;
        for (const auto & b : bs.balls) {
            Rational sum(0);
            for (std::size_t c = 0; c < point.size(); ++c) {
                Rational d = point[c] - b.center[c];
                sum = sum + d * d;
            }
            if (sum < b.radius * b.radius)
                ++count;
        }
        best = std::max(best, count);
    }
    return {best, false};
}

} // namespace profilekit
