#include "profilekit/treerep.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "profilekit/profiles.hpp"

namespace profilekit {

namespace {

bool sorted_contains(const std::vector<int> & xs, int v)
{
    return std::binary_search(xs.begin(), xs.end(), v);
}

bool sorted_intersect(const std::vector<int> & a, const std::vector<int> & b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

std::vector<int> sorted_union(const std::vector<int> & a, const std::vector<int> & b)
{
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

long long saturating_mul(long long a, long long b)
{
    const long long cap = std::numeric_limits<long long>::max() / 2;
    if (a > 0 && b > cap / a)
        return cap;
    return a * b;
}

long long saturating_pow(long long base, int exp)
{
    long long r = 1;
    for (int i = 0; i < exp; ++i)
        r = saturating_mul(r, base);
    return r;
}

} // namespace

void TreeRepresentation::check_node(int t) const
{
    if (t < 1 || t > node_count)
        throw StructureError("node id " + std::to_string(t) + " out of range 1.." + std::to_string(node_count));
}

std::vector<int> TreeRepresentation::model_of(int v) const
{
    std::vector<int> nodes;
    for (int t = 1; t <= node_count; ++t)
        if (sorted_contains(bags[static_cast<std::size_t>(t)], v))
            nodes.push_back(t);
    return nodes;
}

RootedTree RootedTree::of(int node_count, const std::vector<std::pair<int, int>> & edges, int root)
{
    if (node_count < 1)
        throw StructureError("tree must have at least one node");
    if (root < 1 || root > node_count)
        throw StructureError("root out of range");
    if (static_cast<int>(edges.size()) != node_count - 1)
        throw StructureError("a tree on " + std::to_string(node_count) + " nodes needs " +
                             std::to_string(node_count - 1) + " edges, got " + std::to_string(edges.size()));
    RootedTree t;
    t.node_count = node_count;
    t.root = root;
    t.adj.assign(static_cast<std::size_t>(node_count) + 1, {});
    for (auto [a, b] : edges) {
        if (a < 1 || a > node_count || b < 1 || b > node_count || a == b)
            throw StructureError("bad tree edge " + std::to_string(a) + " " + std::to_string(b));
        t.adj[static_cast<std::size_t>(a)].push_back(b);
        t.adj[static_cast<std::size_t>(b)].push_back(a);
    }
    t.parent.assign(static_cast<std::size_t>(node_count) + 1, -1);
    t.depth.assign(static_cast<std::size_t>(node_count) + 1, -1);
    std::deque<int> queue{root};
    t.parent[static_cast<std::size_t>(root)] = 0;
    t.depth[static_cast<std::size_t>(root)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : t.adj[static_cast<std::size_t>(u)]) {
            if (t.depth[static_cast<std::size_t>(w)] == -1) {
                t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(u)] + 1;
                t.parent[static_cast<std::size_t>(w)] = u;
                queue.push_back(w);
            }
        }
    }
    for (int v = 1; v <= node_count; ++v)
        if (t.depth[static_cast<std::size_t>(v)] == -1)
            throw StructureError("tree is disconnected");
    return t;
}

int RootedTree::lca(int a, int b) const
{
    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)])
        a = parent[static_cast<std::size_t>(a)];
    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)])
        b = parent[static_cast<std::size_t>(b)];
    while (a != b) {
        a = parent[static_cast<std::size_t>(a)];
        b = parent[static_cast<std::size_t>(b)];
    }
    return a;
}

ValidationReport validate_representation(const Graph & g, const TreeRepresentation & rep)
{
    ValidationReport report;
    if (rep.node_count < 1) {
        report.violations.push_back("representation has no nodes");
        return report;
    }
    if (static_cast<int>(rep.bags.size()) != rep.node_count + 1) {
        report.violations.push_back("bag table size does not match node count");
        return report;
    }

    // Tree shape first; everything else assumes it.
    try {
        RootedTree::of(rep.node_count, rep.tree_edges, 1);
    }
    catch (const StructureError & e) {
        report.violations.push_back(e.what());
        return report;
    }

    for (int t = 1; t <= rep.node_count; ++t) {
        for (int v : rep.bag(t)) {
            if (v < 1 || v > g.vertex_count()) {
                report.violations.push_back("bag " + std::to_string(t) + " contains unknown vertex " +
                                            std::to_string(v));
                return report;
            }
        }
        if (!std::is_sorted(rep.bag(t).begin(), rep.bag(t).end()) ||
            std::adjacent_find(rep.bag(t).begin(), rep.bag(t).end()) != rep.bag(t).end()) {
            report.violations.push_back("bag " + std::to_string(t) + " is not a sorted set");
            return report;
        }
    }

    std::vector<std::vector<int>> tree_adj(static_cast<std::size_t>(rep.node_count) + 1);
    for (auto [a, b] : rep.tree_edges) {
        tree_adj[static_cast<std::size_t>(a)].push_back(b);
        tree_adj[static_cast<std::size_t>(b)].push_back(a);
    }

    // Models: nonempty and connected in the tree.
    for (int v = 1; v <= g.vertex_count(); ++v) {
        auto model = rep.model_of(v);
        if (model.empty()) {
            report.violations.push_back("vertex " + std::to_string(v) + " appears in no bag");
            continue;
        }
        std::vector<char> in_model(static_cast<std::size_t>(rep.node_count) + 1, 0);
        for (int t : model)
            in_model[static_cast<std::size_t>(t)] = 1;
        std::deque<int> queue{model.front()};
        std::vector<char> seen(static_cast<std::size_t>(rep.node_count) + 1, 0);
        seen[static_cast<std::size_t>(model.front())] = 1;
        std::size_t reached = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : tree_adj[static_cast<std::size_t>(u)]) {
                if (in_model[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    queue.push_back(w);
                }
            }
        }
        if (reached != model.size())
            report.violations.push_back("model of vertex " + std::to_string(v) + " is disconnected");
    }

    // Every graph edge inside some bag.
    for (auto [u, v] : g.edges()) {
        if (!sorted_intersect(rep.model_of(u), rep.model_of(v)))
            report.violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " is covered by no bag");
    }

    int width = -1;
    for (int t = 1; t <= rep.node_count; ++t)
        width = std::max(width, static_cast<int>(rep.bag(t).size()) - 1);
    report.width = width;

    // Length: max intra-bag graph distance; one BFS per distinct bag vertex.
    std::map<int, std::vector<int>> dist_cache;
    int length = 0;
    for (int t = 1; t <= rep.node_count; ++t) {
        const auto & bag = rep.bag(t);
        for (std::size_t i = 0; i < bag.size() && length != kInfinity; ++i) {
            auto it = dist_cache.find(bag[i]);
            if (it == dist_cache.end())
                it = dist_cache.emplace(bag[i], bfs_distances(g, bag[i])).first;
            for (std::size_t j = i + 1; j < bag.size(); ++j) {
                int d = it->second[static_cast<std::size_t>(bag[j])];
                if (d == kInfinity) {
                    length = kInfinity;
                    break;
                }
                length = std::max(length, d);
            }
        }
    }
    report.length = length;
    report.valid = report.violations.empty();
    return report;
}

bool models_match_adjacency(const Graph & g, const TreeRepresentation & rep)
{
    std::vector<std::vector<int>> models(static_cast<std::size_t>(g.vertex_count()) + 1);
    for (int v = 1; v <= g.vertex_count(); ++v)
        models[static_cast<std::size_t>(v)] = rep.model_of(v);
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v)
            if (sorted_intersect(models[static_cast<std::size_t>(u)], models[static_cast<std::size_t>(v)]) !=
                g.has_edge(u, v))
                return false;
    return true;
}

std::map<int, int> highest_nodes(const TreeRepresentation & rep, const std::vector<int> & vertices)
{
    RootedTree tree = RootedTree::of(rep.node_count, rep.tree_edges, rep.root.value_or(1));
    std::map<int, int> result;
    for (int v : vertices) {
        auto model = rep.model_of(v);
        if (model.empty())
            throw StructureError("vertex " + std::to_string(v) + " has an empty model");
        int best = model.front();
        for (int t : model)
            if (tree.depth[static_cast<std::size_t>(t)] < tree.depth[static_cast<std::size_t>(best)])
                best = t;
        result[v] = best;
    }
    return result;
}

std::vector<int> lca_closure(const RootedTree & tree, const std::vector<int> & m)
{
    std::set<int> closure;
    std::vector<int> base(m);
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (int x : base) {
        if (x < 1 || x > tree.node_count)
            throw StructureError("node " + std::to_string(x) + " not in tree");
        closure.insert(x);
    }
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
            closure.insert(tree.lca(base[i], base[j]));
    return {closure.begin(), closure.end()};
}

TreeRepresentation normalize_representation(const TreeRepresentation & rep)
{
    // Union-find over nodes, merging across edges with equal bags.
    std::vector<int> up(static_cast<std::size_t>(rep.node_count) + 1);
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](int x) {
        while (up[static_cast<std::size_t>(x)] != x) {
            up[static_cast<std::size_t>(x)] = up[static_cast<std::size_t>(up[static_cast<std::size_t>(x)])];
            x = up[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (auto [a, b] : rep.tree_edges)
        if (rep.bag(a) == rep.bag(b))
            up[static_cast<std::size_t>(find(a))] = find(b);

    std::vector<int> new_id(static_cast<std::size_t>(rep.node_count) + 1, 0);
    int next = 0;
    for (int t = 1; t <= rep.node_count; ++t)
        if (find(t) == t)
            new_id[static_cast<std::size_t>(t)] = ++next;

    TreeRepresentation out;
    out.node_count = next;
    out.bags.assign(static_cast<std::size_t>(next) + 1, {});
    for (int t = 1; t <= rep.node_count; ++t)
        out.bags[static_cast<std::size_t>(new_id[static_cast<std::size_t>(find(t))])] = rep.bag(t);
    std::set<std::pair<int, int>> edges;
    for (auto [a, b] : rep.tree_edges) {
        int na = new_id[static_cast<std::size_t>(find(a))];
        int nb = new_id[static_cast<std::size_t>(find(b))];
        if (na != nb)
            edges.insert({std::min(na, nb), std::max(na, nb)});
    }
    out.tree_edges.assign(edges.begin(), edges.end());
    if (rep.root)
        out.root = new_id[static_cast<std::size_t>(find(*rep.root))];
    return out;
}

GuardingFamily tw_guarding_family(const Graph & g, const TreeRepresentation & rep,
                                  const TargetSet & a_set, int radius)
{
    if (radius < 0)
        throw InputError("radius must be nonnegative");
    auto report = validate_representation(g, rep);
    if (!report.valid)
        throw StructureError("invalid tree representation: " + report.violations.front());

    TreeRepresentation norm = normalize_representation(rep);
    if (!norm.root)
        norm.root = 1;
    RootedTree tree = RootedTree::of(norm.node_count, norm.tree_edges, *norm.root);

    auto highest = highest_nodes(norm, a_set.vertices);
    std::vector<int> b_nodes;
    for (const auto & [vertex, node] : highest)
        b_nodes.push_back(node);
    auto closure = lca_closure(tree, b_nodes);

    std::vector<char> in_closure(static_cast<std::size_t>(norm.node_count) + 1, 0);
    for (int b : closure)
        in_closure[static_cast<std::size_t>(b)] = 1;
    auto strict_ancestor_in_closure = [&](int b) {
        int cur = tree.parent[static_cast<std::size_t>(b)];
        while (cur != 0) {
            if (in_closure[static_cast<std::size_t>(cur)])
                return cur;
            cur = tree.parent[static_cast<std::size_t>(cur)];
        }
        return b; // topmost closure node points at itself
    };

    std::set<std::vector<int>> sets;
    for (int b : closure) {
        sets.insert(norm.bag(b));
        sets.insert(sorted_union(norm.bag(b), norm.bag(strict_ancestor_in_closure(b))));
    }

    GuardingFamily family;
    family.sets.assign(sets.begin(), sets.end());
    family.radius = radius;
    family.member_cap = 2 * (report.width + 1);
    family.target = a_set;
    return family;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph & g)
{
    const int n = g.vertex_count();
    if (n == 0)
        return std::vector<int>{};

    // Maximum cardinality search; visiting order reversed is a candidate PEO.
    std::vector<int> weight(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> visit_order;
    visit_order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 1; v <= n; ++v)
            if (!visited[static_cast<std::size_t>(v)] &&
                (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        visited[static_cast<std::size_t>(best)] = 1;
        visit_order.push_back(best);
        for (int w : g.neighbours(best))
            if (!visited[static_cast<std::size_t>(w)])
                ++weight[static_cast<std::size_t>(w)];
    }
    std::vector<int> peo(visit_order.rbegin(), visit_order.rend());

    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(peo[static_cast<std::size_t>(i)])] = i;

    // Tarjan-Yannakakis check: later neighbours of each vertex must hang off
    // the earliest of them.
    for (int i = 0; i < n; ++i) {
        int v = peo[static_cast<std::size_t>(i)];
        std::vector<int> later;
        for (int w : g.neighbours(v))
            if (pos[static_cast<std::size_t>(w)] > i)
                later.push_back(w);
        if (later.empty())
            continue;
        int parent = later.front();
        for (int w : later)
            if (pos[static_cast<std::size_t>(w)] < pos[static_cast<std::size_t>(parent)])
                parent = w;
        for (int w : later)
            if (w != parent && !g.has_edge(parent, w))
                return std::nullopt;
    }
    return peo;
}

bool is_chordal(const Graph & g)
{
    return perfect_elimination_ordering(g).has_value();
}

namespace {

// A chordless cycle of length >= 4, for the non-chordal error message. Only
// called when one exists.
std::vector<int> find_hole(const Graph & g)
{
    const int n = g.vertex_count();
    for (int z = 1; z <= n; ++z) {
        const auto & nb = g.neighbours(z);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], y = nb[j];
                if (g.has_edge(x, y))
                    continue;
                // Shortest x-y path avoiding N[z] except at the endpoints.
                std::vector<char> blocked(static_cast<std::size_t>(n) + 1, 0);
                blocked[static_cast<std::size_t>(z)] = 1;
                for (int w : nb)
                    blocked[static_cast<std::size_t>(w)] = 1;
                blocked[static_cast<std::size_t>(x)] = 0;
                blocked[static_cast<std::size_t>(y)] = 0;
                std::vector<int> prev(static_cast<std::size_t>(n) + 1, -1);
                std::deque<int> queue{x};
                prev[static_cast<std::size_t>(x)] = x;
                while (!queue.empty() && prev[static_cast<std::size_t>(y)] == -1) {
                    int u = queue.front();
                    queue.pop_front();
                    for (int w : g.neighbours(u)) {
                        if (!blocked[static_cast<std::size_t>(w)] && prev[static_cast<std::size_t>(w)] == -1) {
                            prev[static_cast<std::size_t>(w)] = u;
                            queue.push_back(w);
                        }
                    }
                }
                if (prev[static_cast<std::size_t>(y)] == -1)
                    continue;
                std::vector<int> cycle{z};
                for (int cur = y; cur != x; cur = prev[static_cast<std::size_t>(cur)])
                    cycle.push_back(cur);
                cycle.push_back(x);
                std::reverse(cycle.begin() + 1, cycle.end());
                return cycle;
            }
        }
    }
    return {};
}

std::string join_ids(const std::vector<int> & xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

} // namespace

TreeRepresentation clique_tree(const Graph & g)
{
    auto peo = perfect_elimination_ordering(g);
    if (!peo) {
        auto hole = find_hole(g);
        throw DomainError("graph is not chordal; chordless cycle: " + join_ids(hole));
    }
    const int n = g.vertex_count();
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i)
        pos[static_cast<std::size_t>((*peo)[static_cast<std::size_t>(i)])] = i;

    std::vector<std::vector<int>> candidates;
    for (int i = 0; i < n; ++i) {
        int v = (*peo)[static_cast<std::size_t>(i)];
        std::vector<int> clique{v};
        for (int w : g.neighbours(v))
            if (pos[static_cast<std::size_t>(w)] > i)
                clique.push_back(w);
        std::sort(clique.begin(), clique.end());
        candidates.push_back(std::move(clique));
    }
    std::vector<std::vector<int>> cliques;
    for (const auto & c : candidates) {
        bool maximal = true;
        for (const auto & d : candidates)
            if (&c != &d && c.size() < d.size() &&
                std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                maximal = false;
                break;
            }
        if (maximal && std::find(cliques.begin(), cliques.end(), c) == cliques.end())
            cliques.push_back(c);
    }

    TreeRepresentation rep;
    rep.node_count = static_cast<int>(cliques.size());
    rep.bags.assign(cliques.size() + 1, {});
    for (std::size_t i = 0; i < cliques.size(); ++i)
        rep.bags[i + 1] = cliques[i];

    // Maximum-weight spanning tree of the clique intersection graph is a
    // valid clique tree (junction-tree property).
    const int m = rep.node_count;
    if (m > 1) {
        std::vector<char> in_tree(static_cast<std::size_t>(m) + 1, 0);
        std::vector<int> best_weight(static_cast<std::size_t>(m) + 1, -1);
        std::vector<int> best_link(static_cast<std::size_t>(m) + 1, 0);
        in_tree[1] = 1;
        for (int t = 2; t <= m; ++t) {
            std::vector<int> inter;
            std::set_intersection(rep.bag(1).begin(), rep.bag(1).end(),
                                  rep.bag(t).begin(), rep.bag(t).end(), std::back_inserter(inter));
            best_weight[static_cast<std::size_t>(t)] = static_cast<int>(inter.size());
            best_link[static_cast<std::size_t>(t)] = 1;
        }
        for (int step = 1; step < m; ++step) {
            int pick = -1;
            for (int t = 1; t <= m; ++t)
                if (!in_tree[static_cast<std::size_t>(t)] &&
                    (pick == -1 ||
                     best_weight[static_cast<std::size_t>(t)] > best_weight[static_cast<std::size_t>(pick)]))
                    pick = t;
            in_tree[static_cast<std::size_t>(pick)] = 1;
            rep.tree_edges.emplace_back(best_link[static_cast<std::size_t>(pick)], pick);
            for (int t = 1; t <= m; ++t) {
                if (in_tree[static_cast<std::size_t>(t)])
                    continue;
                std::vector<int> inter;
                std::set_intersection(rep.bag(pick).begin(), rep.bag(pick).end(),
                                      rep.bag(t).begin(), rep.bag(t).end(), std::back_inserter(inter));
                if (static_cast<int>(inter.size()) > best_weight[static_cast<std::size_t>(t)]) {
                    best_weight[static_cast<std::size_t>(t)] = static_cast<int>(inter.size());
                    best_link[static_cast<std::size_t>(t)] = pick;
                }
            }
        }
    }
    return rep;
}

CasePartition chordal_case_partition(const Graph & g, const TreeRepresentation & rep,
                                     const TargetSet & a_set, int root)
{
    auto report = validate_representation(g, rep);
    if (!report.valid)
        throw StructureError("invalid tree representation: " + report.violations.front());
    if (report.length > 1)
        throw DomainError("case partition needs a representation of length at most 1");
    if (a_set.vertices.empty())
        throw InputError("target set must be nonempty");

    TreeRepresentation rooted = rep;
    rooted.root = root;
    RootedTree tree = RootedTree::of(rep.node_count, rep.tree_edges, root);

    auto highest = highest_nodes(rooted, a_set.vertices);
    std::vector<int> b_nodes;
    for (const auto & [vertex, node] : highest)
        b_nodes.push_back(node);
    auto closure = lca_closure(tree, b_nodes);
    std::vector<char> in_closure(static_cast<std::size_t>(rep.node_count) + 1, 0);
    for (int b : closure)
        in_closure[static_cast<std::size_t>(b)] = 1;

    // Components of the tree minus the closure nodes.
    std::vector<int> comp(static_cast<std::size_t>(rep.node_count) + 1, 0);
    int comp_count = 0;
    for (int t = 1; t <= rep.node_count; ++t) {
        if (in_closure[static_cast<std::size_t>(t)] || comp[static_cast<std::size_t>(t)] != 0)
            continue;
        ++comp_count;
        std::deque<int> queue{t};
        comp[static_cast<std::size_t>(t)] = comp_count;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : tree.adj[static_cast<std::size_t>(u)]) {
                if (!in_closure[static_cast<std::size_t>(w)] && comp[static_cast<std::size_t>(w)] == 0) {
                    comp[static_cast<std::size_t>(w)] = comp_count;
                    queue.push_back(w);
                }
            }
        }
    }

    // Boundary of each component, and the attachment node next to each
    // boundary node (unique in a tree).
    std::vector<std::vector<int>> boundary(static_cast<std::size_t>(comp_count) + 1);
    std::vector<std::vector<int>> attachment(static_cast<std::size_t>(comp_count) + 1);
    for (int t = 1; t <= rep.node_count; ++t) {
        if (!in_closure[static_cast<std::size_t>(t)])
            continue;
        for (int w : tree.adj[static_cast<std::size_t>(t)]) {
            if (in_closure[static_cast<std::size_t>(w)])
                continue;
            int c = comp[static_cast<std::size_t>(w)];
            if (std::find(boundary[static_cast<std::size_t>(c)].begin(),
                          boundary[static_cast<std::size_t>(c)].end(), t) ==
                boundary[static_cast<std::size_t>(c)].end()) {
                boundary[static_cast<std::size_t>(c)].push_back(t);
                attachment[static_cast<std::size_t>(c)].push_back(w);
            }
        }
    }

    CasePartition partition;
    partition.closure_nodes = closure;
    std::map<int, std::vector<int>> single_by_anchor;
    std::map<int, std::size_t> double_index;
    for (int c = 1; c <= comp_count; ++c) {
        const auto & bd = boundary[static_cast<std::size_t>(c)];
        if (bd.size() > 2)
            throw StructureError("component with more than two closure neighbours");
        if (bd.size() == 2) {
            CasePartition::DoublePart part;
            int t0 = bd[0], t1 = bd[1];
            if (tree.depth[static_cast<std::size_t>(t0)] < tree.depth[static_cast<std::size_t>(t1)])
                std::swap(t0, t1);
            part.anchor_low = t0;
            part.anchor_high = t1;
            // Tree path between the two attachment nodes, inside the component.
            int from = attachment[static_cast<std::size_t>(c)][0];
            int to = attachment[static_cast<std::size_t>(c)][1];
            int meet = tree.lca(from, to);
            std::vector<int> up_part, down_part;
            for (int cur = from; cur != meet; cur = tree.parent[static_cast<std::size_t>(cur)])
                up_part.push_back(cur);
            for (int cur = to; cur != meet; cur = tree.parent[static_cast<std::size_t>(cur)])
                down_part.push_back(cur);
            part.path_nodes = up_part;
            part.path_nodes.push_back(meet);
            part.path_nodes.insert(part.path_nodes.end(), down_part.rbegin(), down_part.rend());
            double_index[c] = partition.double_neighbour.size();
            partition.double_neighbour.push_back(std::move(part));
        }
        else if (bd.size() == 1) {
            single_by_anchor[bd[0]]; // parts keyed by anchor, filled below
        }
        // a component with no closure neighbour can only be the whole tree
        // when the closure is empty, which needs an empty target -- rejected.
    }

    for (int v = 1; v <= g.vertex_count(); ++v) {
        auto model = rep.model_of(v);
        bool touches_closure = false;
        for (int t : model)
            if (in_closure[static_cast<std::size_t>(t)]) {
                touches_closure = true;
                break;
            }
        if (touches_closure) {
            partition.bag_vertices.push_back(v);
            continue;
        }
        int c = comp[static_cast<std::size_t>(model.front())];
        const auto & bd = boundary[static_cast<std::size_t>(c)];
        if (bd.size() == 1)
            single_by_anchor[bd[0]].push_back(v);
        else if (bd.size() == 2)
            partition.double_neighbour[double_index[c]].vertices.push_back(v);
        else
            throw StructureError("vertex " + std::to_string(v) + " lives in an unanchored component");
    }

    for (auto & [anchor, vertices] : single_by_anchor)
        partition.single_neighbour.push_back({anchor, std::move(vertices)});
    return partition;
}

SeparatorReport separator_profile_bound_check(const Graph & g, const std::vector<int> & x_set,
                                              const std::vector<int> & s1, const std::vector<int> & s2,
                                              const TargetSet & a_set, int radius, int ell)
{
    if (radius < 0 || ell < 0)
        throw InputError("radius and ell must be nonnegative");
    for (int v : x_set)
        g.check_vertex(v);
    for (int v : s1)
        g.check_vertex(v);
    for (int v : s2)
        g.check_vertex(v);

    std::vector<char> in_x(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : x_set)
        in_x[static_cast<std::size_t>(v)] = 1;
    std::vector<char> in_sep(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
    for (int v : s1)
        in_sep[static_cast<std::size_t>(v)] = 1;
    for (int v : s2)
        in_sep[static_cast<std::size_t>(v)] = 1;

    // Separation: no edge may cross from X to the outside with both ends
    // off the separator.
    for (auto [u, v] : g.edges()) {
        bool xu = in_x[static_cast<std::size_t>(u)], xv = in_x[static_cast<std::size_t>(v)];
        if (xu == xv)
            continue;
        if (!in_sep[static_cast<std::size_t>(u)] && !in_sep[static_cast<std::size_t>(v)])
            throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                    " crosses the separator");
    }

    auto check_diameter = [&](const std::vector<int> & s, const char * name) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto dist = bfs_distances(g, s[i], ell);
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (dist[static_cast<std::size_t>(s[j])] == kInfinity)
                    throw PreconditionError(std::string(name) + " has vertices " + std::to_string(s[i]) +
                                            " and " + std::to_string(s[j]) + " at distance above " +
                                            std::to_string(ell));
        }
    };
    check_diameter(s1, "first separator side");
    check_diameter(s2, "second separator side");

    for (int a : a_set.vertices)
        if (in_x[static_cast<std::size_t>(a)] && !in_sep[static_cast<std::size_t>(a)])
            throw PreconditionError("target vertex " + std::to_string(a) +
                                    " lies in the separated set but not in the separator");

    auto profiles = profiles_of_all(g, a_set, radius);
    std::set<Profile> distinct;
    for (int v : x_set) {
        const auto & p = profiles[static_cast<std::size_t>(v)];
        if (!is_all_infinite(p))
            distinct.insert(p);
    }

    SeparatorReport report;
    report.profile_count = static_cast<long long>(distinct.size());
    report.one_separator = std::set<int>(s1.begin(), s1.end()) == std::set<int>(s2.begin(), s2.end());
    long long classes = saturating_pow(ell + 1, a_set.size());
    long long factor = report.one_separator ? (radius + 2)
                                            : saturating_mul(radius + 2, radius + 2);
    report.bound = saturating_mul(factor, classes);
    report.ok = report.profile_count <= report.bound;
    return report;
}

} // namespace profilekit
