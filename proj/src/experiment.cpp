#include "profilekit/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "profilekit/bounds.hpp"
#include "profilekit/constructions.hpp"
#include "profilekit/io.hpp"
#include "profilekit/oracles.hpp"
#include "profilekit/rng.hpp"
#include "profilekit/verify.hpp"

namespace profilekit {

bool ExperimentReport::all_pass() const
{
    for (const auto & row : rows)
        if (row.gating && !row.pass)
            return false;
    return true;
}

namespace {

std::uint64_t instance_seed(std::uint64_t master, std::uint64_t suite_tag, std::uint64_t index)
{
    std::uint64_t x = master ^ (suite_tag * 0x9E3779B97F4A7C15ull) ^ (index + 1) * 0xBF58476D1CE4E5B9ull;
    x ^= x >> 30;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

std::string kv(std::initializer_list<std::pair<const char *, long long>> items)
{
    std::string out;
    for (const auto & [key, value] : items) {
        if (!out.empty())
            out += ';';
        out += key;
        out += '=';
        out += std::to_string(value);
    }
    return out;
}

class RowTimer {
public:
    RowTimer() : start_(std::chrono::steady_clock::now()) {}
    long long micros() const
    {
        return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                     start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// One (graph, target, radius) evaluation point of a suite; the instance
// invariant suite revisits every one of them.
struct Probe {
    Graph graph;
    TargetSet target;
    int radius = 0;
};

using ProbeSink = std::function<void(const Probe &)>;

// ---- shared instance streams -------------------------------------------

void foreach_split_case(const std::function<void(int k, int r, const LabeledInstance &)> & fn)
{
    for (int k = 1; k <= 4; ++k)
        for (int r = 0; r <= 5; ++r)
            fn(k, r, gen_split_gadget(k, r));
}

void foreach_subcubic_case(const std::function<void(int k, const LabeledInstance &)> & fn)
{
    for (int k : {2, 3})
        fn(k, gen_subcubic(k));
}

void foreach_interval_lb_case(const std::function<void(int r, int k, const LabeledInstance &)> & fn)
{
    for (auto [r, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 4}, {6, 4}})
        fn(r, k, gen_interval_lb(r, k));
}

struct TreewidthInstance {
    int index = 0;
    std::uint64_t seed = 0;
    int t = 0;
    int r = 0;
    LabeledInstance inst;
    TargetSet target;
};

void foreach_treewidth_instance(std::uint64_t master,
                                const std::function<void(const TreewidthInstance &)> & fn)
{
    const int sizes[] = {8, 12, 20, 35, 50};
    const int keeps[] = {1000, 850, 700};
    for (int idx = 0; idx < 50; ++idx) {
        TreewidthInstance ti;
        ti.index = idx;
        ti.seed = instance_seed(master, 5, static_cast<std::uint64_t>(idx));
        ti.t = 1 + idx % 3;
        int n = sizes[(idx / 3) % 5];
        int keep = keeps[idx % 3];
        ti.inst = gen_random_partial_ktree(n, ti.t, keep, ti.seed);
        Rng rng(ti.seed ^ 0xA5A5A5A5ull);
        int a_size = 1 + idx % 4;
        ti.target = TargetSet{rng.sample_subset(n, std::min(a_size, n))};
        ti.r = idx % 5;
        fn(ti);
    }
}

struct MopInstance {
    int index = 0;
    std::uint64_t seed = 0;
    int r = 0;
    LabeledInstance inst;
    TargetSet target;
};

void foreach_mop_instance(std::uint64_t master, const std::function<void(const MopInstance &)> & fn)
{
    const int sizes[] = {6, 10, 16, 25, 40};
    for (int idx = 0; idx < 50; ++idx) {
        MopInstance mi;
        mi.index = idx;
        mi.seed = instance_seed(master, 9, static_cast<std::uint64_t>(idx));
        int n = sizes[idx % 5];
        mi.inst = gen_random_mop(n, mi.seed);
        Rng rng(mi.seed ^ 0x5A5A5A5Aull);
        int a_size = 1 + idx % 4;
        mi.target = TargetSet{rng.sample_subset(n, std::min(a_size, n))};
        mi.r = idx % 6;
        fn(mi);
    }
}

struct IntervalInstance {
    int index = 0;
    std::uint64_t seed = 0;
    int r = 0;
    LabeledInstance inst;
    TargetSet target;
};

void foreach_interval_instance(std::uint64_t master,
                               const std::function<void(const IntervalInstance &)> & fn)
{
    const int sizes[] = {10, 25, 40, 60};
    for (int idx = 0; idx < 100; ++idx) {
        IntervalInstance ii;
        ii.index = idx;
        ii.seed = instance_seed(master, 10, static_cast<std::uint64_t>(idx));
        int n = sizes[idx % 4];
        ii.inst = gen_random_interval(n, ii.seed);
        Rng rng(ii.seed ^ 0x3C3C3C3Cull);
        int a_size = 1 + idx % 5;
        ii.target = TargetSet{rng.sample_subset(n, std::min(a_size, n))};
        ii.r = idx % 7;
        fn(ii);
    }
}

struct ChordalInstance {
    int index = 0;
    std::uint64_t seed = 0;
    int r = 0;
    LabeledInstance inst;
    TargetSet target;
};

void foreach_chordal_instance(std::uint64_t master,
                              const std::function<void(const ChordalInstance &)> & fn)
{
    const int sizes[] = {8, 15, 25, 40};
    int index = 0;
    for (int idx = 0; idx < 44; ++idx, ++index) {
        ChordalInstance ci;
        ci.index = index;
        ci.seed = instance_seed(master, 11, static_cast<std::uint64_t>(idx));
        int t = 1 + idx % 3;
        int n = sizes[idx % 4];
        ci.inst = gen_random_partial_ktree(n, t, 1000, ci.seed); // full t-tree, chordal
        Rng rng(ci.seed ^ 0xC3C3C3C3ull);
        int a_size = 1 + idx % 4;
        ci.target = TargetSet{rng.sample_subset(n, std::min(a_size, n))};
        ci.r = 1 + idx % 4;
        fn(ci);
    }
    for (int k : {2, 4}) {
        for (int r : {2, 3, 4}) {
            ChordalInstance ci;
            ci.index = index++;
            ci.seed = instance_seed(master, 11, 1000 + static_cast<std::uint64_t>(index));
            ci.inst = gen_chordal_lb(r, k);
            ci.target = ci.inst.target;
            ci.r = r;
            fn(ci);
        }
    }
}

struct OracleInstance {
    int index = 0;
    std::uint64_t seed = 0;
    int r = 0;
    Graph graph;
    Ordering ordering;
    TargetSet target;
    GuardingFamily family;
};

void foreach_oracle_instance(std::uint64_t master,
                             const std::function<void(const OracleInstance &)> & fn)
{
    for (int idx = 0; idx < 200; ++idx) {
        OracleInstance oi;
        oi.index = idx;
        oi.seed = instance_seed(master, 7, static_cast<std::uint64_t>(idx));
        Rng rng(oi.seed);
        int n = 3 + idx % 7;
        int permille = 250 + 250 * (idx % 3);
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng.chance(static_cast<std::uint64_t>(permille), 1000))
                    edges.emplace_back(u, v);
        oi.graph = Graph::from_edges(n, edges);
        // Random ordering.
        std::vector<int> order = rng.sample_subset(n, n);
        for (int i = n - 1; i > 0; --i)
            std::swap(order[static_cast<std::size_t>(i)],
                      order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        oi.ordering = Ordering::from_sequence(n, order);
        oi.target = TargetSet{rng.sample_subset(n, 1 + static_cast<int>(rng.below(std::min(3, n))))};
        oi.r = static_cast<int>(rng.below(4));
        GuardingFamily fam;
        fam.radius = oi.r;
        fam.member_cap = n;
        fam.target = oi.target;
        int members = 1 + static_cast<int>(rng.below(3));
        for (int s = 0; s < members; ++s)
            fam.sets.push_back(rng.sample_subset(n, 1 + static_cast<int>(rng.below(
                                                        static_cast<std::uint64_t>(n)))));
        oi.family = fam;
        fn(oi);
    }
}

// ---- suites --------------------------------------------------------------

void suite_split(ExperimentReport & report, std::uint64_t seed)
{
    int idx = 0;
    foreach_split_case([&](int k, int r, const LabeledInstance & inst) {
        RowTimer timer;
        long long measured = profile_complexity(inst.graph, inst.target, r).count;
        long long expected = inst.predicted.at("pc_paper");
        ExperimentRow row{"split-exact", idx++, seed, kv({{"k", k}, {"r", r}}),
                          std::to_string(measured), std::to_string(expected),
                          measured == expected, timer.micros()};
        report.rows.push_back(row);
    });
}

void suite_subcubic(ExperimentReport & report, std::uint64_t seed)
{
    int idx = 0;
    foreach_subcubic_case([&](int k, const LabeledInstance & inst) {
        RowTimer timer;
        long long measured =
            neighbourhood_complexity(inst.graph, inst.target, inst.prescribed_radius).count;
        long long expected = inst.predicted.at("nc");
        ExperimentRow row{"subcubic-nc", idx++, seed,
                          kv({{"k", k}, {"r", inst.prescribed_radius}}), std::to_string(measured),
                          std::to_string(expected), measured == expected, timer.micros()};
        report.rows.push_back(row);
    });
}

void suite_interval_lb(ExperimentReport & report, std::uint64_t seed)
{
    int idx = 0;
    foreach_interval_lb_case([&](int r, int k, const LabeledInstance & inst) {
        RowTimer timer;
        long long measured = profile_complexity(inst.graph, inst.target, r).count;
        long long floor = inst.predicted.at("pc_floor_spec");
        ExperimentRow row{"interval-lb", idx++, seed, kv({{"k", k}, {"r", r}, {"gating", 1}}),
                          std::to_string(measured), std::to_string(floor), measured >= floor,
                          timer.micros()};
        report.rows.push_back(row);
        long long paper = inst.predicted.at("pc_paper");
        ExperimentRow info{"interval-lb", idx++, seed, kv({{"k", k}, {"r", r}, {"gating", 0}}),
                           std::to_string(measured), std::to_string(paper), measured >= paper,
                           timer.micros()};
        info.gating = false;
        report.rows.push_back(info);
    });
}

void suite_tl2(ExperimentReport & report, std::uint64_t seed)
{
    RowTimer timer;
    const int r = 4, k = 4;
    auto inst = gen_tl2_lb(r, k);
    long long measured = profile_complexity(inst.graph, inst.target, r).count;
    long long floor = inst.predicted.at("pc_floor");
    report.rows.push_back({"tl2-lb", 0, seed, kv({{"k", k}, {"r", r}}), std::to_string(measured),
                           std::to_string(floor), measured >= floor, timer.micros()});
    RowTimer timer2;
    auto validation = validate_representation(inst.graph, *inst.decomposition);
    bool cert_ok = validation.valid && validation.length <= 2;
    report.rows.push_back({"tl2-lb", 1, seed, kv({{"k", k}, {"r", r}, {"valid", validation.valid}}),
                           std::to_string(validation.length), "2", cert_ok, timer2.micros()});
}

void suite_treewidth_upper(ExperimentReport & report, std::uint64_t seed)
{
    foreach_treewidth_instance(seed, [&](const TreewidthInstance & ti) {
        RowTimer timer;
        long long measured = profile_complexity(ti.inst.graph, ti.target, ti.r).count;
        BigInt bound = treewidth_bound(ti.t, ti.r, ti.target.size());
        bool pass = BigInt(static_cast<unsigned long long>(measured)) <= bound;
        report.rows.push_back({"treewidth-upper", ti.index, ti.seed,
                               kv({{"n", ti.inst.graph.vertex_count()},
                                   {"t", ti.t},
                                   {"r", ti.r},
                                   {"a", ti.target.size()}}),
                               std::to_string(measured), bound.str(), pass, timer.micros()});
    });
}

void suite_guarding(ExperimentReport & report, std::uint64_t seed)
{
    foreach_treewidth_instance(seed, [&](const TreewidthInstance & ti) {
        {
            RowTimer timer;
            auto family = tw_guarding_family(ti.inst.graph, *ti.inst.decomposition, ti.target, ti.r);
            auto check = verify_guarding(ti.inst.graph, ti.target, ti.r, family);
            long long size_cap = 4ll * ti.target.size();
            std::size_t max_member = 0;
            for (const auto & s : family.sets)
                max_member = std::max(max_member, s.size());
            bool pass = check.ok && check.cap_violations.empty() &&
                        static_cast<long long>(family.sets.size()) <= size_cap &&
                        static_cast<int>(max_member) <= 2 * (ti.t + 1);
            report.rows.push_back({"guarding", 2 * ti.index, ti.seed,
                                   kv({{"kind", 0},
                                       {"t", ti.t},
                                       {"r", ti.r},
                                       {"a", ti.target.size()},
                                       {"member_max", static_cast<long long>(max_member)}}),
                                   std::to_string(family.sets.size()), std::to_string(size_cap),
                                   pass, timer.micros()});
        }
        {
            RowTimer timer;
            auto ord = degeneracy_ordering(ti.inst.graph);
            auto family = colnum_guarding_family(ti.inst.graph, ord, ti.target, ti.r);
            auto check = verify_guarding(ti.inst.graph, ti.target, ti.r, family);
            long long size_cap =
                static_cast<long long>(wcol_of(ti.inst.graph, ord, ti.r)) * ti.target.size();
            int member_cap = scol_of(ti.inst.graph, ord, 2 * ti.r);
            std::size_t max_member = 0;
            for (const auto & s : family.sets)
                max_member = std::max(max_member, s.size());
            bool pass = check.ok && static_cast<long long>(family.sets.size()) <= size_cap &&
                        static_cast<int>(max_member) <= member_cap;
            report.rows.push_back({"guarding", 2 * ti.index + 1, ti.seed,
                                   kv({{"kind", 1},
                                       {"t", ti.t},
                                       {"r", ti.r},
                                       {"a", ti.target.size()},
                                       {"member_max", static_cast<long long>(max_member)},
                                       {"member_cap", member_cap}}),
                                   std::to_string(family.sets.size()), std::to_string(size_cap),
                                   pass, timer.micros()});
        }
    });
}

void suite_oracle_equiv(ExperimentReport & report, std::uint64_t seed)
{
    foreach_oracle_instance(seed, [&](const OracleInstance & oi) {
        RowTimer timer;
        long long mismatches = 0;
        auto weak = wreach_all(oi.graph, oi.ordering, oi.r);
        auto strong = sreach_all(oi.graph, oi.ordering, oi.r);
        for (int v = 1; v <= oi.graph.vertex_count(); ++v) {
            if (weak[static_cast<std::size_t>(v)] != oracles::wreach_oracle(oi.graph, oi.ordering, v, oi.r))
                ++mismatches;
            if (strong[static_cast<std::size_t>(v)] !=
                oracles::sreach_oracle(oi.graph, oi.ordering, v, oi.r))
                ++mismatches;
        }
        bool fast = verify_guarding(oi.graph, oi.target, oi.r, oi.family).ok;
        bool slow = oracles::guarding_oracle(oi.graph, oi.target, oi.r, oi.family);
        if (fast != slow)
            ++mismatches;
        report.rows.push_back({"oracle-equiv", oi.index, oi.seed,
                               kv({{"n", oi.graph.vertex_count()},
                                   {"m", oi.graph.edge_count()},
                                   {"r", oi.r}}),
                               std::to_string(mismatches), "0", mismatches == 0, timer.micros()});
    });
}

void suite_lca(ExperimentReport & report, std::uint64_t seed)
{
    for (int idx = 0; idx < 100; ++idx) {
        RowTimer timer;
        std::uint64_t iseed = instance_seed(seed, 8, static_cast<std::uint64_t>(idx));
        Rng rng(iseed);
        int n = 2 + static_cast<int>(rng.below(199));
        std::vector<std::pair<int, int>> edges;
        for (int v = 2; v <= n; ++v)
            edges.emplace_back(rng.range(1, v - 1), v);
        auto tree = RootedTree::of(n, edges, 1);
        int m_size = 1 + static_cast<int>(rng.below(std::min(10, n)));
        auto m = rng.sample_subset(n, m_size);
        auto closure = lca_closure(tree, m);

        long long violations = 0;
        if (static_cast<long long>(closure.size()) > 2ll * m_size)
            ++violations;
        if (lca_closure(tree, closure) != closure)
            ++violations;
        if (closure != oracles::lca_closure_oracle(tree, m))
            ++violations;
        // Every component of the tree minus the closure sees at most two
        // closure nodes.
        std::vector<char> in_closure(static_cast<std::size_t>(n) + 1, 0);
        for (int b : closure)
            in_closure[static_cast<std::size_t>(b)] = 1;
        std::vector<int> comp(static_cast<std::size_t>(n) + 1, 0);
        int comp_count = 0;
        for (int v = 1; v <= n; ++v) {
            if (in_closure[static_cast<std::size_t>(v)] || comp[static_cast<std::size_t>(v)] != 0)
                continue;
            ++comp_count;
            std::vector<int> stack{v};
            comp[static_cast<std::size_t>(v)] = comp_count;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : tree.adj[static_cast<std::size_t>(u)])
                    if (!in_closure[static_cast<std::size_t>(w)] && comp[static_cast<std::size_t>(w)] == 0) {
                        comp[static_cast<std::size_t>(w)] = comp_count;
                        stack.push_back(w);
                    }
            }
        }
        std::vector<std::set<int>> neighbours(static_cast<std::size_t>(comp_count) + 1);
        for (int b : closure)
            for (int w : tree.adj[static_cast<std::size_t>(b)])
                if (!in_closure[static_cast<std::size_t>(w)])
                    neighbours[static_cast<std::size_t>(comp[static_cast<std::size_t>(w)])].insert(b);
        for (int c = 1; c <= comp_count; ++c)
            if (neighbours[static_cast<std::size_t>(c)].size() > 2)
                ++violations;

        report.rows.push_back({"lca-closure", idx, iseed, kv({{"n", n}, {"m", m_size}}),
                               std::to_string(violations), "0", violations == 0, timer.micros()});
    }
}

void suite_outerplanar(ExperimentReport & report, std::uint64_t seed)
{
    foreach_mop_instance(seed, [&](const MopInstance & mi) {
        RowTimer timer;
        long long measured = profile_complexity(mi.inst.graph, mi.target, mi.r).count;
        BigInt bound = outerplanar_bound(mi.r, mi.target.size());
        int a1 = mi.target.vertices.front();
        auto levels = outerplanar_levels(mi.inst.graph, *mi.inst.circular_order, a1, mi.target, mi.r);
        bool pass = BigInt(static_cast<unsigned long long>(measured)) <= bound && levels.monotone &&
                    levels.sum_ok;
        report.rows.push_back({"outerplanar", mi.index, mi.seed,
                               kv({{"n", mi.inst.graph.vertex_count()},
                                   {"r", mi.r},
                                   {"a", mi.target.size()},
                                   {"monotone", levels.monotone},
                                   {"sum_ai", levels.sum_level_targets}}),
                               std::to_string(measured), bound.str(), pass, timer.micros()});
    });
}

void suite_interval_upper(ExperimentReport & report, std::uint64_t seed)
{
    foreach_interval_instance(seed, [&](const IntervalInstance & ii) {
        RowTimer timer;
        long long measured = profile_complexity(ii.inst.graph, ii.target, ii.r).count;
        BigInt bound = interval_bound(ii.r, ii.target.size());
        auto sig = interval_signatures(ii.inst.graph, *ii.inst.intervals, ii.target, ii.r);

        long long violations = 0;
        // Signature soundness over non-target vertices.
        auto profiles = profiles_of_all(ii.inst.graph, ii.target, ii.r);
        const int n = ii.inst.graph.vertex_count();
        for (int u = 1; u <= n; ++u) {
            if (ii.target.contains(u))
                continue;
            for (int v = u + 1; v <= n; ++v) {
                if (ii.target.contains(v))
                    continue;
                if (sig.signatures[static_cast<std::size_t>(u)] ==
                        sig.signatures[static_cast<std::size_t>(v)] &&
                    profiles[static_cast<std::size_t>(u)] != profiles[static_cast<std::size_t>(v)])
                    ++violations;
            }
        }
        for (std::size_t i = 0; i < sig.left_chains.size(); ++i) {
            std::set<Rational> merged;
            for (const auto & x : sig.left_chains[i])
                merged.insert(x);
            for (const auto & y : sig.right_chains[i])
                merged.insert(y);
            if (static_cast<long long>(merged.size()) > 2ll * ii.r + 6)
                ++violations;
        }
        bool pass = violations == 0 && BigInt(static_cast<unsigned long long>(measured)) <= bound;
        report.rows.push_back({"interval-upper", ii.index, ii.seed,
                               kv({{"n", n},
                                   {"r", ii.r},
                                   {"a", ii.target.size()},
                                   {"violations", violations}}),
                               std::to_string(measured), bound.str(), pass, timer.micros()});
    });
}

void suite_chordal(ExperimentReport & report, std::uint64_t seed)
{
    foreach_chordal_instance(seed, [&](const ChordalInstance & ci) {
        RowTimer timer;
        long long violations = 0;
        auto rep = clique_tree(ci.inst.graph);
        rep.root = 1;
        auto partition = chordal_case_partition(ci.inst.graph, rep, ci.target, 1);

        // Cover every vertex exactly once.
        std::vector<int> hits(static_cast<std::size_t>(ci.inst.graph.vertex_count()) + 1, 0);
        for (int v : partition.bag_vertices)
            ++hits[static_cast<std::size_t>(v)];
        for (const auto & part : partition.single_neighbour)
            for (int v : part.vertices)
                ++hits[static_cast<std::size_t>(v)];
        for (const auto & part : partition.double_neighbour)
            for (int v : part.vertices)
                ++hits[static_cast<std::size_t>(v)];
        for (int v = 1; v <= ci.inst.graph.vertex_count(); ++v)
            if (hits[static_cast<std::size_t>(v)] != 1)
                ++violations;

        for (const auto & part : partition.single_neighbour) {
            if (part.vertices.empty())
                continue;
            auto sep = rep.bag(part.anchor);
            auto check = separator_profile_bound_check(ci.inst.graph, part.vertices, sep, sep,
                                                       ci.target, ci.r, 1);
            if (!check.ok)
                ++violations;
        }

        long long measured = profile_complexity(ci.inst.graph, ci.target, ci.r).count;
        BigInt bound = chordal_bound(ci.r, ci.target.size());
        bool pass = violations == 0 && BigInt(static_cast<unsigned long long>(measured)) <= bound;
        report.rows.push_back({"chordal", ci.index, ci.seed,
                               kv({{"n", ci.inst.graph.vertex_count()},
                                   {"r", ci.r},
                                   {"a", ci.target.size()},
                                   {"violations", violations}}),
                               std::to_string(measured), bound.str(), pass, timer.micros()});
    });
}

void suite_nc_pc(ExperimentReport & report, std::uint64_t seed)
{
    std::vector<Probe> probes;
    foreach_split_case([&](int, int r, const LabeledInstance & inst) {
        probes.push_back({inst.graph, inst.target, r});
    });
    foreach_subcubic_case([&](int, const LabeledInstance & inst) {
        probes.push_back({inst.graph, inst.target, inst.prescribed_radius});
    });
    foreach_interval_lb_case([&](int r, int, const LabeledInstance & inst) {
        probes.push_back({inst.graph, inst.target, r});
    });
    {
        auto inst = gen_tl2_lb(4, 4);
        probes.push_back({inst.graph, inst.target, 4});
    }
    foreach_treewidth_instance(seed, [&](const TreewidthInstance & ti) {
        probes.push_back({ti.inst.graph, ti.target, ti.r});
    });
    foreach_oracle_instance(seed, [&](const OracleInstance & oi) {
        probes.push_back({oi.graph, oi.target, oi.r});
    });
    foreach_mop_instance(seed, [&](const MopInstance & mi) {
        probes.push_back({mi.inst.graph, mi.target, mi.r});
    });
    foreach_interval_instance(seed, [&](const IntervalInstance & ii) {
        probes.push_back({ii.inst.graph, ii.target, ii.r});
    });
    foreach_chordal_instance(seed, [&](const ChordalInstance & ci) {
        probes.push_back({ci.inst.graph, ci.target, ci.r});
    });

    for (std::size_t i = 0; i < probes.size(); ++i) {
        RowTimer timer;
        const auto & probe = probes[i];
        long long nc = neighbourhood_complexity(probe.graph, probe.target, probe.radius).count;
        long long pc = profile_complexity(probe.graph, probe.target, probe.radius).count;
        report.rows.push_back({"nc-pc", static_cast<int>(i), seed,
                               kv({{"n", probe.graph.vertex_count()},
                                   {"r", probe.radius},
                                   {"a", probe.target.size()}}),
                               std::to_string(nc), std::to_string(pc + 1), nc <= pc + 1,
                               timer.micros()});
    }
}

void suite_corollary(ExperimentReport & report, std::uint64_t seed, const Budgets & budgets)
{
    int idx = 0;
    foreach_treewidth_instance(seed, [&](const TreewidthInstance & ti) {
        if (ti.inst.graph.vertex_count() > 12 || !is_connected(ti.inst.graph))
            return;
        RowTimer timer;
        auto result = corollary_check(ti.inst.graph, "treewidth", {{"t", ti.t}}, budgets);
        report.rows.push_back({"corollary", idx++, ti.seed,
                               kv({{"class", 0},
                                   {"n", result.n},
                                   {"diam", result.diam},
                                   {"md", result.metric_dim}}),
                               std::to_string(result.n), result.bound.str(), result.ok,
                               timer.micros()});
    });
    foreach_mop_instance(seed, [&](const MopInstance & mi) {
        if (mi.inst.graph.vertex_count() > 12)
            return;
        RowTimer timer;
        auto result = corollary_check(mi.inst.graph, "outerplanar", {}, budgets);
        report.rows.push_back({"corollary", idx++, mi.seed,
                               kv({{"class", 1},
                                   {"n", result.n},
                                   {"diam", result.diam},
                                   {"md", result.metric_dim}}),
                               std::to_string(result.n), result.bound.str(), result.ok,
                               timer.micros()});
    });
}

} // namespace

const std::vector<std::string> & suite_names()
{
    static const std::vector<std::string> names = {
        "split-exact",  "subcubic-nc",     "interval-lb", "tl2-lb",        "treewidth-upper",
        "guarding",     "oracle-equiv",    "lca-closure", "outerplanar",   "interval-upper",
        "chordal",      "nc-pc",           "corollary",
    };
    return names;
}

ExperimentReport run_suite(const std::string & name, std::uint64_t seed, const Budgets & budgets)
{
    ExperimentReport report;
    report.suite = name;
    if (name == "split-exact")
        suite_split(report, seed);
    else if (name == "subcubic-nc")
        suite_subcubic(report, seed);
    else if (name == "interval-lb")
        suite_interval_lb(report, seed);
    else if (name == "tl2-lb")
        suite_tl2(report, seed);
    else if (name == "treewidth-upper")
        suite_treewidth_upper(report, seed);
    else if (name == "guarding")
        suite_guarding(report, seed);
    else if (name == "oracle-equiv")
        suite_oracle_equiv(report, seed);
    else if (name == "lca-closure")
        suite_lca(report, seed);
    else if (name == "outerplanar")
        suite_outerplanar(report, seed);
    else if (name == "interval-upper")
        suite_interval_upper(report, seed);
    else if (name == "chordal")
        suite_chordal(report, seed);
    else if (name == "nc-pc")
        suite_nc_pc(report, seed);
    else if (name == "corollary")
        suite_corollary(report, seed, budgets);
    else
        throw InputError("unknown suite '" + name + "'");
    return report;
}

std::string to_csv(const ExperimentReport & report, bool include_micros)
{
    std::ostringstream out;
    out << "suite,instance,seed,params,measured,bound,pass";
    if (include_micros)
        out << ",micros";
    out << "\n";
    for (const auto & row : report.rows) {
        out << row.suite << "," << row.instance << "," << row.seed << "," << row.params << ","
            << row.measured << "," << row.bound << "," << (row.pass ? 1 : 0);
        if (include_micros)
            out << "," << row.micros;
        out << "\n";
    }
    return out.str();
}

ExperimentReport run_experiment(const std::string & name, std::uint64_t seed,
                                const std::string & out_path, const Budgets & budgets)
{
    auto report = run_suite(name, seed, budgets);
    if (!out_path.empty())
        write_file(out_path, to_csv(report));
    return report;
}

} // namespace profilekit
