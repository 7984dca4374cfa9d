#include "profilekit/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "profilekit/rng.hpp"

namespace profilekit {

int ceil_log2(int k)
{
    int h = 0;
    while ((1 << h) < k)
        ++h;
    return h;
}

namespace {

// Appends a pendant path of `length` edges hanging from `anchor`; returns
// the ids of the new vertices in path order.
std::vector<int> attach_path(std::vector<std::pair<int, int>> & edges, int & next_id, int anchor,
                             int length)
{
    std::vector<int> added;
    int prev = anchor;
    for (int i = 0; i < length; ++i) {
        int v = next_id++;
        edges.emplace_back(prev, v);
        added.push_back(v);
        prev = v;
    }
    return added;
}

} // namespace

LabeledInstance gen_split_gadget(int k, int radius, const Budgets & budgets)
{
    if (k < 1)
        throw InputError("k must be positive");
    if (radius < 0)
        throw InputError("radius must be nonnegative");
    if (k > budgets.construction_k_cap)
        throw BudgetError("split gadget capped at k = " + std::to_string(budgets.construction_k_cap));

    std::vector<std::pair<int, int>> edges;
    int next_id = k + 1;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            edges.emplace_back(i, j);
    for (int mask = 1; mask < (1 << k); ++mask) {
        int subset_vertex = next_id++;
        for (int i = 0; i < k; ++i)
            if (mask & (1 << i))
                edges.emplace_back(i + 1, subset_vertex);
        attach_path(edges, next_id, subset_vertex, radius);
    }

    LabeledInstance inst;
    inst.graph = Graph::from_edges(next_id - 1, edges);
    std::vector<int> target(static_cast<std::size_t>(k));
    std::iota(target.begin(), target.end(), 1);
    inst.target = TargetSet::of(inst.graph, target);
    inst.params = {{"k", k}, {"r", radius}};
    long long families = (1ll << k) - 1;
    // Each subset contributes one profile per live depth 1..r; the clique
    // adds its own k. The (r+1)(2^k-1) figure is kept for comparison.
    inst.predicted["pc"] = static_cast<long long>(radius) * families + k;
    inst.predicted["pc_paper"] = static_cast<long long>(radius + 1) * families;
    return inst;
}

namespace {

struct IntervalGrid {
    std::vector<OpenInterval> intervals; // vertex i = intervals[i-1]
    std::vector<int> first_column;       // the a_i
    std::vector<int> last_column;        // the b_i
    std::vector<int> added;              // inserted interval ids
};

// The interval grid: half = k/2 rows, `radius` columns, row i column j
// spanning ]((j-1)L + i, jL + i + 1/2[ with L = half + 1; behind every
// middle cell, up to half extra intervals, each ending between two starts of
// the cells that follow it.
IntervalGrid build_interval_grid(int radius, int half)
{
    const long long L = half + 1;
    IntervalGrid grid;
    auto cell_id = [&](int i, int j) { return (j - 1) * half + i; };
    for (int j = 1; j <= radius; ++j) {
        for (int i = 1; i <= half; ++i) {
            OpenInterval iv;
            iv.lo = Rational(static_cast<long long>(j - 1) * L + i);
            iv.hi = Rational(2 * (static_cast<long long>(j) * L + i) + 1, 2);
            grid.intervals.push_back(iv);
        }
    }
    for (int i = 1; i <= half; ++i) {
        grid.first_column.push_back(cell_id(i, 1));
        grid.last_column.push_back(cell_id(i, radius));
    }

    // Starts of all base cells, ascending; used to locate the followers of
    // each middle cell.
    std::vector<std::pair<Rational, int>> starts;
    for (int j = 1; j <= radius; ++j)
        for (int i = 1; i <= half; ++i)
            starts.emplace_back(grid.intervals[static_cast<std::size_t>(cell_id(i, j)) - 1].lo,
                                cell_id(i, j));
    std::sort(starts.begin(), starts.end(),
              [](const auto & a, const auto & b) { return a.first < b.first; });

    for (int j = 2; j <= radius - 2; ++j) {
        for (int i = 1; i <= half; ++i) {
            const Rational end = grid.intervals[static_cast<std::size_t>(cell_id(i, j)) - 1].hi;
            std::vector<Rational> follower_starts;
            for (const auto & [lo, id] : starts) {
                if (end < lo)
                    follower_starts.push_back(lo);
                if (static_cast<int>(follower_starts.size()) == half + 1)
                    break;
            }
            if (follower_starts.size() < 2)
                continue; // not enough room at the grid boundary
            int insertable = std::min(half, static_cast<int>(follower_starts.size()) - 1);
            Rational gap = follower_starts.front() - end;
            for (int s = 1; s <= insertable; ++s) {
                OpenInterval iv;
                iv.lo = end + gap * Rational(s, half + 1);
                iv.hi = (follower_starts[static_cast<std::size_t>(s) - 1] +
                         follower_starts[static_cast<std::size_t>(s)]) /
                        Rational(2);
                grid.intervals.push_back(iv);
                grid.added.push_back(static_cast<int>(grid.intervals.size()));
            }
        }
    }
    return grid;
}

void require_even_k(int radius, int k, const Budgets & budgets)
{
    if (radius < 2)
        throw InputError("radius must be at least 2");
    if (k < 2 || k % 2 != 0)
        throw InputError("k must be even and at least 2");
    if (k > budgets.construction_k_cap)
        throw BudgetError("construction capped at k = " + std::to_string(budgets.construction_k_cap));
}

} // namespace

LabeledInstance gen_interval_lb(int radius, int k, const Budgets & budgets)
{
    require_even_k(radius, k, budgets);
    const int half = k / 2;
    IntervalGrid grid = build_interval_grid(radius, half);

    LabeledInstance inst;
    inst.graph = interval_graph_of(grid.intervals);
    std::vector<int> target = grid.first_column;
    target.insert(target.end(), grid.last_column.begin(), grid.last_column.end());
    inst.target = TargetSet::of(inst.graph, target);
    inst.intervals = grid.intervals;
    inst.vertex_groups["added"] = grid.added;
    inst.params = {{"k", k}, {"r", radius}};
    // Base cells and inserted intervals all carry distinct profiles.
    inst.predicted["pc"] = static_cast<long long>(grid.intervals.size());
    inst.predicted["pc_floor_spec"] =
        static_cast<long long>(k) * radius +
        static_cast<long long>(half) * half * (radius - 2);
    inst.predicted["pc_paper"] =
        static_cast<long long>(k) * radius +
        static_cast<long long>(half + 1) * (radius - 2) * half;
    return inst;
}

LabeledInstance gen_chordal_lb(int radius, int k, const Budgets & budgets)
{
    require_even_k(radius, k, budgets);
    const int half = k / 2;
    IntervalGrid grid = build_interval_grid(radius, half);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(grid.intervals.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(grid.intervals.size()); ++j)
            if (intervals_overlap(grid.intervals[static_cast<std::size_t>(i)],
                                  grid.intervals[static_cast<std::size_t>(j)]))
                edges.emplace_back(i + 1, j + 1);

    int next_id = static_cast<int>(grid.intervals.size()) + 1;
    std::vector<int> subset_family;
    for (int id : grid.added)
        attach_path(edges, next_id, id, radius);
    for (const auto & clique : {grid.first_column, grid.last_column}) {
        int size = static_cast<int>(clique.size());
        for (int mask = 1; mask < (1 << size); ++mask) {
            int subset_vertex = next_id++;
            subset_family.push_back(subset_vertex);
            for (int i = 0; i < size; ++i)
                if (mask & (1 << i))
                    edges.emplace_back(clique[static_cast<std::size_t>(i)], subset_vertex);
            auto path = attach_path(edges, next_id, subset_vertex, radius);
            subset_family.insert(subset_family.end(), path.begin(), path.end());
        }
    }

    LabeledInstance inst;
    inst.graph = Graph::from_edges(next_id - 1, edges);
    std::vector<int> target = grid.first_column;
    target.insert(target.end(), grid.last_column.begin(), grid.last_column.end());
    inst.target = TargetSet::of(inst.graph, target);
    inst.vertex_groups["vx_family"] = subset_family;
    inst.params = {{"k", k}, {"r", radius}};
    inst.predicted["pc_vx_floor"] =
        static_cast<long long>(radius + 1) * ((1ll << half) - 1);
    return inst;
}

LabeledInstance gen_tl2_lb(int radius, int k, const Budgets & budgets)
{
    require_even_k(radius, k, budgets);
    const int half = k / 2;
    const int pairs = (1 << half) - 1;
    const int columns = radius - 1;

    // Vertex layout: chain vertices per (X, Y) pair, then the two cliques,
    // then the apex vertices, then pendant paths.
    auto chain_vertex = [&](int x, int y, int i) {
        return ((x - 1) * pairs + (y - 1)) * columns + i;
    };
    int next_id = pairs * pairs * columns + 1;
    std::vector<int> a_clique, b_clique;
    for (int i = 0; i < half; ++i)
        a_clique.push_back(next_id++);
    for (int i = 0; i < half; ++i)
        b_clique.push_back(next_id++);
    std::vector<int> apex;
    for (int i = 0; i < radius; ++i)
        apex.push_back(next_id++);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < half; ++i)
        for (int j = i + 1; j < half; ++j) {
            edges.emplace_back(a_clique[static_cast<std::size_t>(i)], a_clique[static_cast<std::size_t>(j)]);
            edges.emplace_back(b_clique[static_cast<std::size_t>(i)], b_clique[static_cast<std::size_t>(j)]);
        }

    for (int x = 1; x <= pairs; ++x) {
        for (int y = 1; y <= pairs; ++y) {
            for (int i = 1; i < columns; ++i)
                edges.emplace_back(chain_vertex(x, y, i), chain_vertex(x, y, i + 1));
            for (int bit = 0; bit < half; ++bit) {
                if (x & (1 << bit))
                    edges.emplace_back(chain_vertex(x, y, 1), a_clique[static_cast<std::size_t>(bit)]);
                if (y & (1 << bit))
                    edges.emplace_back(chain_vertex(x, y, columns), b_clique[static_cast<std::size_t>(bit)]);
            }
            for (int i = 1; i <= columns; ++i) {
                edges.emplace_back(chain_vertex(x, y, i), apex[static_cast<std::size_t>(i) - 1]);
                edges.emplace_back(chain_vertex(x, y, i), apex[static_cast<std::size_t>(i)]);
            }
        }
    }
    for (int bit = 0; bit < half; ++bit) {
        edges.emplace_back(apex.front(), a_clique[static_cast<std::size_t>(bit)]);
        edges.emplace_back(apex.back(), b_clique[static_cast<std::size_t>(bit)]);
    }

    // Pendant paths on every chain vertex, with their decomposition chains.
    struct Pendant {
        int anchor;
        int anchor_column;
        std::vector<int> vertices;
    };
    std::vector<Pendant> pendants;
    for (int x = 1; x <= pairs; ++x)
        for (int y = 1; y <= pairs; ++y)
            for (int i = 1; i <= columns; ++i) {
                int anchor = chain_vertex(x, y, i);
                pendants.push_back({anchor, i, attach_path(edges, next_id, anchor, radius)});
            }

    LabeledInstance inst;
    inst.graph = Graph::from_edges(next_id - 1, edges);
    std::vector<int> target = a_clique;
    target.insert(target.end(), b_clique.begin(), b_clique.end());
    inst.target = TargetSet::of(inst.graph, target);
    inst.params = {{"k", k}, {"r", radius}};
    if (radius % 2 == 0)
        inst.predicted["pc_floor"] = static_cast<long long>(radius / 2) * (radius - 1) *
                                     static_cast<long long>(pairs) * pairs;

    // Path decomposition: one bag per column transition plus the two clique
    // bags; an apex vertex in each bag keeps the length at 2.
    TreeRepresentation rep;
    std::vector<std::vector<int>> bags;
    auto column_vertices = [&](int i) {
        std::vector<int> out;
        for (int x = 1; x <= pairs; ++x)
            for (int y = 1; y <= pairs; ++y)
                out.push_back(chain_vertex(x, y, i));
        return out;
    };
    {
        std::vector<int> bag = a_clique;
        bag.push_back(apex.front());
        auto col = column_vertices(1);
        bag.insert(bag.end(), col.begin(), col.end());
        bags.push_back(bag);
    }
    for (int m = 1; m <= columns - 1; ++m) {
        std::vector<int> bag{apex[static_cast<std::size_t>(m)]};
        auto col = column_vertices(m);
        bag.insert(bag.end(), col.begin(), col.end());
        auto next_col = column_vertices(m + 1);
        bag.insert(bag.end(), next_col.begin(), next_col.end());
        bags.push_back(bag);
    }
    {
        std::vector<int> bag = b_clique;
        bag.push_back(apex.back());
        auto col = column_vertices(columns);
        bag.insert(bag.end(), col.begin(), col.end());
        bags.push_back(bag);
    }
    std::vector<std::pair<int, int>> tree_edges;
    for (int i = 1; i < static_cast<int>(bags.size()); ++i)
        tree_edges.emplace_back(i, i + 1);
    // Chain bags for the pendant paths, hanging off a bag that contains the
    // anchor column. Column 1 lives in the first bag, column i in bag i.
    for (const auto & pendant : pendants) {
        int prev_bag = pendant.anchor_column == 1 ? 1 : pendant.anchor_column;
        int prev_vertex = pendant.anchor;
        for (int v : pendant.vertices) {
            bags.push_back({std::min(prev_vertex, v), std::max(prev_vertex, v)});
            int bag_id = static_cast<int>(bags.size());
            tree_edges.emplace_back(prev_bag, bag_id);
            prev_bag = bag_id;
            prev_vertex = v;
        }
    }
    rep.node_count = static_cast<int>(bags.size());
    rep.bags.assign(bags.size() + 1, {});
    for (std::size_t i = 0; i < bags.size(); ++i) {
        std::sort(bags[i].begin(), bags[i].end());
        rep.bags[i + 1] = bags[i];
    }
    rep.tree_edges = tree_edges;
    rep.root = 1;
    inst.decomposition = rep;
    return inst;
}

LabeledInstance gen_subcubic(int k, const Budgets & budgets)
{
    if (k < 1)
        throw InputError("k must be positive");
    if (k > budgets.subcubic_k_cap)
        throw BudgetError("subcubic construction capped at k = " + std::to_string(budgets.subcubic_k_cap));
    const int h = ceil_log2(k);
    const int radius = k + h + 1;

    std::vector<std::pair<int, int>> edges;
    int next_id = 1;
    // Full binary tree of the given height; returns (root, leaves).
    auto build_tree = [&](int height) {
        std::vector<int> level{next_id++};
        int root = level.front();
        for (int d = 1; d <= height; ++d) {
            std::vector<int> next_level;
            for (int parent : level) {
                for (int c = 0; c < 2; ++c) {
                    int child = next_id++;
                    edges.emplace_back(parent, child);
                    next_level.push_back(child);
                }
            }
            level = std::move(next_level);
        }
        return std::make_pair(root, level);
    };

    std::vector<int> roots;
    std::vector<std::vector<int>> tree_leaves;
    std::vector<std::size_t> next_leaf(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        auto [root, leaves] = build_tree(k);
        roots.push_back(root);
        tree_leaves.push_back(leaves);
    }
    std::vector<int> subset_roots;
    for (int mask = 0; mask < (1 << k); ++mask) {
        auto [root, leaves] = build_tree(h);
        subset_roots.push_back(root);
        std::size_t used = 0;
        for (int i = 0; i < k; ++i) {
            if (!(mask & (1 << i)))
                continue;
            int mine = leaves[used++];
            int theirs = tree_leaves[static_cast<std::size_t>(i)]
                                    [next_leaf[static_cast<std::size_t>(i)]++];
            edges.emplace_back(mine, theirs);
        }
    }

    LabeledInstance inst;
    inst.graph = Graph::from_edges(next_id - 1, edges);
    inst.target = TargetSet::of(inst.graph, roots);
    inst.vertex_groups["subset_roots"] = subset_roots;
    inst.params = {{"k", k}, {"r", radius}};
    inst.predicted["nc"] = 1ll << k;
    inst.prescribed_radius = radius;
    return inst;
}

LabeledInstance gen_random_partial_ktree(int n, int t, int keep_permille, std::uint64_t seed)
{
    if (n < 1 || t < 1)
        throw InputError("n and t must be positive");
    if (keep_permille < 0 || keep_permille > 1000)
        throw InputError("keep_permille must be within 0..1000");
    Rng rng(seed);

    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> bag_edges;
    std::vector<std::pair<int, int>> ktree_edges;
    const int base = std::min(n, t + 1);
    {
        std::vector<int> bag(static_cast<std::size_t>(base));
        std::iota(bag.begin(), bag.end(), 1);
        bags.push_back(bag);
        for (int i = 1; i <= base; ++i)
            for (int j = i + 1; j <= base; ++j)
                ktree_edges.emplace_back(i, j);
    }
    for (int v = base + 1; v <= n; ++v) {
        int host = rng.range(1, static_cast<int>(bags.size()));
        std::vector<int> host_bag = bags[static_cast<std::size_t>(host) - 1];
        // Drop one random member to get a t-clique to attach to.
        int drop = rng.range(0, static_cast<int>(host_bag.size()) - 1);
        host_bag.erase(host_bag.begin() + drop);
        for (int u : host_bag)
            ktree_edges.emplace_back(u, v);
        host_bag.push_back(v);
        std::sort(host_bag.begin(), host_bag.end());
        bags.push_back(host_bag);
        bag_edges.emplace_back(host, static_cast<int>(bags.size()));
    }

    std::vector<std::pair<int, int>> kept;
    for (auto e : ktree_edges)
        if (rng.chance(static_cast<std::uint64_t>(keep_permille), 1000))
            kept.push_back(e);

    LabeledInstance inst;
    inst.graph = Graph::from_edges(n, kept);
    inst.target = TargetSet{};
    TreeRepresentation rep;
    rep.node_count = static_cast<int>(bags.size());
    rep.bags.assign(bags.size() + 1, {});
    for (std::size_t i = 0; i < bags.size(); ++i)
        rep.bags[i + 1] = bags[i];
    rep.tree_edges = bag_edges;
    rep.root = 1;
    inst.decomposition = rep;
    inst.params = {{"n", n}, {"t", t}, {"keep_permille", keep_permille},
                   {"seed", static_cast<long long>(seed)}};
    return inst;
}

LabeledInstance gen_random_mop(int n, std::uint64_t seed)
{
    if (n < 3)
        throw InputError("a maximal outerplanar graph needs at least 3 vertices");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);

    // Random fan triangulation of each polygon region.
    std::vector<std::pair<int, int>> stack{{1, n}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        if (hi - lo < 2)
            continue;
        int mid = rng.range(lo + 1, hi - 1);
        if (mid - lo > 1)
            edges.emplace_back(lo, mid);
        if (hi - mid > 1)
            edges.emplace_back(mid, hi);
        stack.push_back({lo, mid});
        stack.push_back({mid, hi});
    }

    LabeledInstance inst;
    inst.graph = Graph::from_edges(n, edges);
    inst.target = TargetSet{};
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    inst.circular_order = order;
    inst.params = {{"n", n}, {"seed", static_cast<long long>(seed)}};
    return inst;
}

LabeledInstance gen_random_interval(int n, std::uint64_t seed)
{
    if (n < 1)
        throw InputError("n must be positive");
    Rng rng(seed);
    // 2n distinct endpoints keep open and closed overlap in agreement.
    const int span = 4 * n;
    std::vector<int> points(static_cast<std::size_t>(span));
    std::iota(points.begin(), points.end(), 0);
    for (int i = 0; i < 2 * n; ++i) {
        int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(span - i)));
        std::swap(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
    }
    std::vector<OpenInterval> intervals;
    for (int i = 0; i < n; ++i) {
        int a = points[static_cast<std::size_t>(2 * i)];
        int b = points[static_cast<std::size_t>(2 * i + 1)];
        intervals.push_back({Rational(std::min(a, b)), Rational(std::max(a, b))});
    }
    // Repair gaps so the graph is connected: whenever nothing starts before
    // the running maximum endpoint, stretch the interval holding it just past
    // the next start. Quarter offsets keep all endpoint values distinct.
    {
        std::vector<std::size_t> by_lo(intervals.size());
        std::iota(by_lo.begin(), by_lo.end(), std::size_t{0});
        std::sort(by_lo.begin(), by_lo.end(), [&](std::size_t a, std::size_t b) {
            return intervals[a].lo < intervals[b].lo;
        });
        std::size_t frontier = by_lo.front();
        for (std::size_t idx = 1; idx < by_lo.size(); ++idx) {
            std::size_t cur = by_lo[idx];
            if (!(intervals[cur].lo < intervals[frontier].hi))
                intervals[frontier].hi = intervals[cur].lo + Rational(1, 4);
            if (intervals[frontier].hi < intervals[cur].hi)
                frontier = cur;
        }
    }

    LabeledInstance inst;
    inst.graph = interval_graph_of(intervals);
    inst.target = TargetSet{};
    inst.intervals = intervals;
    std::vector<Ball> balls;
    for (int i = 0; i < n; ++i) {
        Ball b;
        b.id = i + 1;
        b.center = {(intervals[static_cast<std::size_t>(i)].lo + intervals[static_cast<std::size_t>(i)].hi) /
                    Rational(2)};
        b.radius = (intervals[static_cast<std::size_t>(i)].hi - intervals[static_cast<std::size_t>(i)].lo) /
                   Rational(2);
        balls.push_back(b);
    }
    inst.balls = BallSet::of(1, balls);
    inst.params = {{"n", n}, {"seed", static_cast<long long>(seed)}};
    return inst;
}

LabeledInstance gen_random_balls(int n, int d, std::uint64_t seed)
{
    if (n < 1 || d < 1)
        throw InputError("n and d must be positive");
    Rng rng(seed);
    std::vector<Ball> balls;
    for (int i = 1; i <= n; ++i) {
        Ball b;
        b.id = i;
        for (int c = 0; c < d; ++c)
            b.center.push_back(Rational(rng.range(0, 4 * n)));
        b.radius = Rational(rng.range(1, 6), 2);
        balls.push_back(b);
    }
    LabeledInstance inst;
    inst.balls = BallSet::of(d, balls);
    inst.graph = ball_intersection_graph(*inst.balls);
    inst.target = TargetSet{};
    inst.params = {{"n", n}, {"d", d}, {"seed", static_cast<long long>(seed)}};
    return inst;
}

} // namespace profilekit
