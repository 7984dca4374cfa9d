#include "profilekit/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

#include "profilekit/bounds.hpp"

namespace profilekit {

Graph interval_graph_of(const std::vector<OpenInterval> & intervals)
{
    const int n = static_cast<int>(intervals.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        if (!(intervals[static_cast<std::size_t>(i)].lo < intervals[static_cast<std::size_t>(i)].hi))
            throw InputError("interval " + std::to_string(i + 1) + " is empty");
        for (int j = i + 1; j < n; ++j)
            if (intervals_overlap(intervals[static_cast<std::size_t>(i)],
                                  intervals[static_cast<std::size_t>(j)]))
                edges.emplace_back(i + 1, j + 1);
    }
    return Graph::from_edges(n, edges);
}

namespace {

std::vector<int> shortest_path_avoiding(const Graph & g, int from, const std::vector<int> & targets,
                                        const std::vector<char> & blocked, int radius)
{
    // BFS in the graph minus the blocked set; returns a shortest path to the
    // nearest target within the radius, or empty.
    const int n = g.vertex_count();
    std::vector<int> prev(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> dist(static_cast<std::size_t>(n) + 1, kInfinity);
    std::vector<char> is_target(static_cast<std::size_t>(n) + 1, 0);
    for (int t : targets)
        is_target[static_cast<std::size_t>(t)] = 1;
    if (blocked[static_cast<std::size_t>(from)])
        return {};
    std::deque<int> queue{from};
    dist[static_cast<std::size_t>(from)] = 0;
    prev[static_cast<std::size_t>(from)] = from;
    int hit = is_target[static_cast<std::size_t>(from)] ? from : -1;
    while (!queue.empty() && hit == -1) {
        int u = queue.front();
        queue.pop_front();
        if (dist[static_cast<std::size_t>(u)] >= radius)
            continue;
        for (int w : g.neighbours(u)) {
            if (blocked[static_cast<std::size_t>(w)] || dist[static_cast<std::size_t>(w)] != kInfinity)
                continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            prev[static_cast<std::size_t>(w)] = u;
            if (is_target[static_cast<std::size_t>(w)]) {
                hit = w;
                break;
            }
            queue.push_back(w);
        }
    }
    if (hit == -1)
        return {};
    std::vector<int> path;
    for (int cur = hit;; cur = prev[static_cast<std::size_t>(cur)]) {
        path.push_back(cur);
        if (cur == from)
            break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

GuardingReport verify_guarding(const Graph & g, const TargetSet & a_set, int radius,
                               const GuardingFamily & family)
{
    if (radius < 0)
        throw InputError("radius must be nonnegative");
    const int n = g.vertex_count();
    GuardingReport report;
    for (std::size_t i = 0; i < family.sets.size(); ++i)
        if (static_cast<int>(family.sets[i].size()) > family.member_cap)
            report.cap_violations.push_back(i);

    // covered[v]: some member contains v, or deleting that member pushes
    // every target outside it beyond the radius.
    std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
    for (const auto & member : family.sets) {
        std::vector<char> in_member(static_cast<std::size_t>(n) + 1, 0);
        for (int v : member) {
            g.check_vertex(v);
            in_member[static_cast<std::size_t>(v)] = 1;
        }
        std::vector<int> outside_targets;
        for (int a : a_set.vertices)
            if (!in_member[static_cast<std::size_t>(a)])
                outside_targets.push_back(a);
        // Truncated multi-source BFS in g minus the member.
        std::vector<int> dist(static_cast<std::size_t>(n) + 1, kInfinity);
        std::deque<int> queue;
        for (int a : outside_targets) {
            dist[static_cast<std::size_t>(a)] = 0;
            queue.push_back(a);
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (dist[static_cast<std::size_t>(u)] >= radius)
                continue;
            for (int w : g.neighbours(u)) {
                if (!in_member[static_cast<std::size_t>(w)] &&
                    dist[static_cast<std::size_t>(w)] == kInfinity) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (int v = 1; v <= n; ++v)
            if (in_member[static_cast<std::size_t>(v)] || dist[static_cast<std::size_t>(v)] > radius)
                covered[static_cast<std::size_t>(v)] = 1;
    }

    // Vertices with no short path to the target need no member at all.
    auto base_dist = bfs_distances_multi(g, a_set.vertices.empty() ? std::vector<int>{} : a_set.vertices,
                                         radius);
    int bad = 0;
    for (int v = 1; v <= n && bad == 0; ++v) {
        if (covered[static_cast<std::size_t>(v)])
            continue;
        if (a_set.vertices.empty() || base_dist[static_cast<std::size_t>(v)] > radius)
            continue;
        bad = v;
    }
    if (bad == 0) {
        report.ok = true;
        return report;
    }

    // Witness: for the member that gets closest to covering `bad`, a
    // shortest surviving path to the target.
    GuardingCounterexample ce;
    ce.vertex = bad;
    std::vector<int> best_path;
    bool have = false;
    auto consider = [&](const std::vector<char> & blocked) {
        std::vector<int> reachable_targets;
        for (int a : a_set.vertices)
            if (!blocked[static_cast<std::size_t>(a)])
                reachable_targets.push_back(a);
        auto path = shortest_path_avoiding(g, bad, reachable_targets, blocked, radius);
        if (path.empty())
            return;
        if (!have || path.size() > best_path.size()) {
            best_path = path;
            have = true;
        }
    };
    if (family.sets.empty()) {
        std::vector<char> blocked(static_cast<std::size_t>(n) + 1, 0);
        consider(blocked);
    }
    for (const auto & member : family.sets) {
        std::vector<char> blocked(static_cast<std::size_t>(n) + 1, 0);
        for (int v : member)
            blocked[static_cast<std::size_t>(v)] = 1;
        if (blocked[static_cast<std::size_t>(bad)])
            continue; // member contains the vertex, cannot be the failing one
        consider(blocked);
    }
    if (have) {
        ce.path = best_path;
        ce.target = best_path.back();
    }
    else {
        ce.target = bad; // zero-length path at an uncovered target vertex
        ce.path = {bad};
    }
    report.counterexample = ce;
    report.ok = false;
    return report;
}

namespace {

int part_index(const std::vector<Rational> & points, const Rational & x)
{
    auto it = std::lower_bound(points.begin(), points.end(), x);
    auto below = static_cast<int>(it - points.begin());
    if (it != points.end() && *it == x)
        return 2 * below + 1;
    return 2 * below;
}

} // namespace

SignatureResult interval_signatures(const Graph & g, const std::vector<OpenInterval> & intervals,
                                    const TargetSet & a_set, int radius)
{
    if (radius < 0)
        throw InputError("radius must be nonnegative");
    if (static_cast<int>(intervals.size()) != g.vertex_count())
        throw InputError("interval certificate size does not match the graph");
    Graph from_cert = interval_graph_of(intervals);
    if (from_cert.edges() != g.edges())
        throw InputError("interval certificate does not reproduce the graph");

    SignatureResult result;
    Rational global_min_lo = intervals.front().lo;
    Rational global_max_hi = intervals.front().hi;
    for (const auto & iv : intervals) {
        global_min_lo = std::min(global_min_lo, iv.lo);
        global_max_hi = std::max(global_max_hi, iv.hi);
    }

    for (int a : a_set.vertices) {
        const auto & ai = intervals[static_cast<std::size_t>(a) - 1];
        std::vector<Rational> left{ai.lo};
        while (static_cast<int>(left.size()) < radius) {
            // Smallest left endpoint among intervals ending strictly after
            // the current front.
            Rational next = left.back();
            bool found = false;
            for (const auto & iv : intervals) {
                if (left.back() < iv.hi && (!found || iv.lo < next)) {
                    next = iv.lo;
                    found = true;
                }
            }
            if (!found || !(next < left.back()))
                break;
            left.push_back(next);
        }
        if (global_min_lo < left.back())
            left.push_back(global_min_lo);

        std::vector<Rational> right{ai.hi};
        while (static_cast<int>(right.size()) < radius) {
            Rational next = right.back();
            bool found = false;
            for (const auto & iv : intervals) {
                if (iv.lo < right.back() && (!found || next < iv.hi)) {
                    next = iv.hi;
                    found = true;
                }
            }
            if (!found || !(right.back() < next))
                break;
            right.push_back(next);
        }
        if (right.back() < global_max_hi)
            right.push_back(global_max_hi);

        result.left_chains.push_back(std::move(left));
        result.right_chains.push_back(std::move(right));
    }

    std::vector<Rational> points;
    for (const auto & chain : result.left_chains)
        points.insert(points.end(), chain.begin(), chain.end());
    for (const auto & chain : result.right_chains)
        points.insert(points.end(), chain.begin(), chain.end());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    result.cut_points = points;

    result.signatures.assign(intervals.size() + 1, {0, 0});
    for (int v = 1; v <= g.vertex_count(); ++v) {
        const auto & iv = intervals[static_cast<std::size_t>(v) - 1];
        result.signatures[static_cast<std::size_t>(v)] = {part_index(points, iv.lo),
                                                          part_index(points, iv.hi)};
    }
    return result;
}

LevelsReport outerplanar_levels(const Graph & g, const std::vector<int> & circular_order, int a1,
                                const TargetSet & a_set, int radius)
{
    if (radius < 0)
        throw InputError("radius must be nonnegative");
    g.check_vertex(a1);
    if (!a_set.contains(a1))
        throw InputError("a1 must belong to the target set");
    if (!is_connected(g))
        throw DomainError("level analysis needs a connected graph");
    const int n = g.vertex_count();
    if (static_cast<int>(circular_order.size()) != n)
        throw InputError("circular order must cover every vertex");
    std::vector<int> rank(static_cast<std::size_t>(n) + 1, -1);
    int a1_index = -1;
    for (int i = 0; i < n; ++i) {
        int v = circular_order[static_cast<std::size_t>(i)];
        g.check_vertex(v);
        if (rank[static_cast<std::size_t>(v)] != -1)
            throw InputError("circular order repeats vertex " + std::to_string(v));
        rank[static_cast<std::size_t>(v)] = i;
        if (v == a1)
            a1_index = i;
    }
    // Cut the circle at a1.
    for (int v = 1; v <= n; ++v)
        rank[static_cast<std::size_t>(v)] = (rank[static_cast<std::size_t>(v)] - a1_index + n) % n;

    LevelsReport report;
    auto dist_a1 = bfs_distances(g, a1);
    int depth = 0;
    for (int v = 1; v <= n; ++v)
        depth = std::max(depth, dist_a1[static_cast<std::size_t>(v)]);
    report.levels.assign(static_cast<std::size_t>(depth) + 1, {});
    for (int v = 1; v <= n; ++v)
        report.levels[static_cast<std::size_t>(dist_a1[static_cast<std::size_t>(v)])].push_back(v);
    report.level_targets.assign(static_cast<std::size_t>(depth) + 1, {});

    for (int a : a_set.vertices) {
        if (a == a1)
            continue;
        auto dist_a = bfs_distances(g, a);
        for (int i = 1; i <= depth; ++i) {
            auto level = report.levels[static_cast<std::size_t>(i)];
            int best = kInfinity;
            for (int v : level)
                best = std::min(best, dist_a[static_cast<std::size_t>(v)]);
            if (best > radius)
                continue;
            report.level_targets[static_cast<std::size_t>(i)].push_back(a);

            std::sort(level.begin(), level.end(), [&](int u, int v) {
                return rank[static_cast<std::size_t>(u)] < rank[static_cast<std::size_t>(v)];
            });
            auto dist_of = [&](std::size_t p) {
                return dist_a[static_cast<std::size_t>(level[p])];
            };
            std::size_t y_pos = 0;
            for (std::size_t p = 1; p < level.size(); ++p)
                if (dist_of(p) < dist_of(y_pos))
                    y_pos = p;
            // Distances must grow moving right of y and moving left of y.
            for (std::size_t p = y_pos + 1; p + 1 < level.size(); ++p) {
                if (dist_of(p) > dist_of(p + 1)) {
                    report.monotone = false;
                    report.violation = std::array<int, 3>{a, level[p], level[p + 1]};
                }
            }
            for (std::size_t p = 1; p + 1 <= y_pos; ++p) {
                if (dist_of(p) > dist_of(p - 1)) {
                    report.monotone = false;
                    report.violation = std::array<int, 3>{a, level[p], level[p - 1]};
                }
            }
        }
    }
    for (const auto & targets : report.level_targets)
        report.sum_level_targets += static_cast<long long>(targets.size());
    report.sum_bound = static_cast<long long>(2 * radius + 1) * a_set.size();
    report.sum_ok = report.sum_level_targets <= report.sum_bound;
    return report;
}

CorollaryReport corollary_check(const Graph & g, const std::string & class_name,
                                const std::map<std::string, long long> & extra_params,
                                const Budgets & budgets)
{
    if (!is_connected(g))
        throw DomainError("corollary check needs a connected graph");
    CorollaryReport report;
    report.n = g.vertex_count();
    report.diam = diameter(g);
    report.metric_dim = metric_dimension(g, budgets).dimension;
    BoundQuery query;
    query.cls = bound_class_from_name(class_name);
    query.params = extra_params;
    query.params["r"] = report.diam;
    query.params["k"] = report.metric_dim;
    report.bound = bound_value(query);
    report.ok = BigInt(static_cast<unsigned long long>(report.n)) <= report.bound;
    return report;
}

} // namespace profilekit
