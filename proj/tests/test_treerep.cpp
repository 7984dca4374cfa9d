#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "profilekit/constructions.hpp"
#include "profilekit/oracles.hpp"
#include "profilekit/rng.hpp"
#include "profilekit/treerep.hpp"
#include "profilekit/verify.hpp"

using namespace profilekit;
using namespace profilekit::testing;

namespace {

TreeRepresentation path_decomposition(int n)
{
    // Bags {i, i+1} along the path graph.
    TreeRepresentation rep;
    rep.node_count = n - 1;
    rep.bags.assign(static_cast<std::size_t>(n), {});
    for (int i = 1; i < n; ++i)
        rep.bags[static_cast<std::size_t>(i)] = {i, i + 1};
    for (int i = 1; i < n - 1; ++i)
        rep.tree_edges.emplace_back(i, i + 1);
    rep.root = 1;
    return rep;
}

RootedTree random_tree(int n, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v)
        edges.emplace_back(rng.range(1, v - 1), v);
    return RootedTree::of(n, edges, 1);
}

} // namespace

TEST_SUITE("treerep")
{
    TEST_CASE("validation of small representations")
    {
        auto p3 = path_graph(3);
        auto rep = path_decomposition(3);
        auto report = validate_representation(p3, rep);
        CHECK(report.valid);
        CHECK(report.width == 1);
        CHECK(report.length == 1);

        auto with_chord = Graph::from_edges(3, {{1, 2}, {2, 3}, {1, 3}});
        auto bad = validate_representation(with_chord, rep);
        CHECK(!bad.valid);
        REQUIRE(!bad.violations.empty());
        CHECK(bad.violations.front().find("1-3") != std::string::npos);

        TreeRepresentation single;
        single.node_count = 1;
        single.bags = {{}, {1, 2, 3, 4}};
        auto k4 = complete_graph(4);
        auto k4_report = validate_representation(k4, single);
        CHECK(k4_report.valid);
        CHECK(k4_report.width == 3);
        CHECK(k4_report.length == 1);
    }

    TEST_CASE("validation flags structural problems")
    {
        auto p3 = path_graph(3);
        TreeRepresentation rep = path_decomposition(3);
        rep.tree_edges.clear(); // two nodes, no edge: not a tree
        CHECK(!validate_representation(p3, rep).valid);

        TreeRepresentation missing = path_decomposition(3);
        missing.bags[2] = {3}; // vertex 2 loses a node; edge 2-3 uncovered
        CHECK(!validate_representation(p3, missing).valid);

        // Disconnected model: vertex 1 in the two end bags only.
        TreeRepresentation split;
        split.node_count = 3;
        split.bags = {{}, {1, 2}, {2, 3}, {1, 3}};
        split.tree_edges = {{1, 2}, {2, 3}};
        auto report = validate_representation(p3, split);
        CHECK(!report.valid);
    }

    TEST_CASE("length is infinite when a bag spans components")
    {
        auto two = Graph::from_edges(2, {});
        TreeRepresentation rep;
        rep.node_count = 1;
        rep.bags = {{}, {1, 2}};
        auto report = validate_representation(two, rep);
        CHECK(report.length == kInfinity);
    }

    TEST_CASE("highest nodes")
    {
        TreeRepresentation single;
        single.node_count = 1;
        single.bags = {{}, {1, 2, 3}};
        single.root = 1;
        auto highest = highest_nodes(single, {1, 2, 3});
        CHECK(highest.at(2) == 1);

        // Path of three bags rooted at one end; vertex 4 only in the far bag.
        auto rep = path_decomposition(4);
        auto far = highest_nodes(rep, {4});
        CHECK(far.at(4) == 3);

        // Caterpillar-style representation, checked against a full scan.
        auto ktree = gen_random_partial_ktree(24, 2, 1000, 11);
        auto & cat = *ktree.decomposition;
        RootedTree tree = RootedTree::of(cat.node_count, cat.tree_edges, 1);
        std::vector<int> all(24);
        for (int v = 1; v <= 24; ++v)
            all[static_cast<std::size_t>(v) - 1] = v;
        auto result = highest_nodes(cat, all);
        for (int v = 1; v <= 24; ++v) {
            int expected = 0;
            int best_depth = 1 << 30;
            for (int t = 1; t <= cat.node_count; ++t) {
                const auto & bag = cat.bag(t);
                if (std::find(bag.begin(), bag.end(), v) != bag.end() &&
                    tree.depth[static_cast<std::size_t>(t)] < best_depth) {
                    best_depth = tree.depth[static_cast<std::size_t>(t)];
                    expected = t;
                }
            }
            CHECK(result.at(v) == expected);
        }

        TreeRepresentation empty_model = single;
        CHECK_THROWS_AS(highest_nodes(empty_model, {9}), StructureError);
    }

    TEST_CASE("lca closure on small trees")
    {
        auto tree = random_tree(10, 3);
        CHECK(lca_closure(tree, {7}) == std::vector<int>{7});

        // Root with two children.
        RootedTree small = RootedTree::of(3, {{1, 2}, {1, 3}}, 1);
        CHECK(lca_closure(small, {2, 3}) == std::vector<int>{1, 2, 3});
    }

    TEST_CASE("lca closure matches the fixpoint oracle")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto tree = random_tree(50, seed);
            Rng rng(seed + 7);
            auto m = rng.sample_subset(50, 6);
            auto closure = lca_closure(tree, m);
            CHECK(closure == oracles::lca_closure_oracle(tree, m));
            CHECK(lca_closure(tree, closure) == closure);
            CHECK(static_cast<int>(closure.size()) <= 2 * 6);
            CHECK(std::includes(closure.begin(), closure.end(), m.begin(), m.end()));
        }
    }

    TEST_CASE("normalization merges equal adjacent bags")
    {
        TreeRepresentation rep;
        rep.node_count = 3;
        rep.bags = {{}, {1, 2}, {1, 2}, {2, 3}};
        rep.tree_edges = {{1, 2}, {2, 3}};
        rep.root = 1;
        auto norm = normalize_representation(rep);
        CHECK(norm.node_count == 2);
        CHECK(validate_representation(path_graph(3), norm).valid);
    }

    TEST_CASE("guarding family from a path decomposition")
    {
        auto p5 = path_graph(5);
        auto rep = path_decomposition(5);
        auto a = TargetSet::of(p5, {1, 5});
        auto family = tw_guarding_family(p5, rep, a, 4);
        CHECK(family.sets.size() <= 8);
        CHECK(family.member_cap == 4);
        for (const auto & member : family.sets)
            CHECK(member.size() <= 4);
        CHECK(verify_guarding(p5, a, 4, family).ok);
    }

    TEST_CASE("guarding family from a single bag")
    {
        auto k4 = complete_graph(4);
        TreeRepresentation single;
        single.node_count = 1;
        single.bags = {{}, {1, 2, 3, 4}};
        auto a = TargetSet::of(k4, {2});
        auto family = tw_guarding_family(k4, single, a, 3);
        REQUIRE(family.sets.size() == 1);
        CHECK(family.sets.front() == std::vector<int>{1, 2, 3, 4});
        CHECK(verify_guarding(k4, a, 3, family).ok);
    }

    TEST_CASE("guarding family on random partial 3-trees")
    {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            auto inst = gen_random_partial_ktree(40, 3, 900, seed);
            Rng rng(seed + 5);
            auto a = TargetSet{rng.sample_subset(40, 4)};
            auto family = tw_guarding_family(inst.graph, *inst.decomposition, a, 3);
            CHECK(family.sets.size() <= 16);
            for (const auto & member : family.sets)
                CHECK(member.size() <= 8);
            CHECK(verify_guarding(inst.graph, a, 3, family).ok);
        }
    }

    TEST_CASE("guarding family rejects invalid representations")
    {
        auto p5 = path_graph(5);
        TreeRepresentation broken = path_decomposition(5);
        broken.bags[2] = {2}; // drops vertex 3's cover of edge 2-3... bag {2} only
        CHECK_THROWS_AS(tw_guarding_family(p5, broken, TargetSet::of(p5, {1}), 2), StructureError);
    }

    TEST_CASE("clique trees of chordal graphs")
    {
        auto k4 = complete_graph(4);
        auto rep = clique_tree(k4);
        CHECK(rep.node_count == 1);
        CHECK(rep.bag(1) == std::vector<int>{1, 2, 3, 4});

        auto p4 = path_graph(4);
        auto path_rep = clique_tree(p4);
        CHECK(path_rep.node_count == 3);
        auto report = validate_representation(p4, path_rep);
        CHECK(report.valid);
        CHECK(report.length == 1);

        auto interval = gen_random_interval(30, 5);
        auto iv_rep = clique_tree(interval.graph);
        auto iv_report = validate_representation(interval.graph, iv_rep);
        CHECK(iv_report.valid);
        CHECK(iv_report.length <= 1);
        CHECK(models_match_adjacency(interval.graph, iv_rep));
    }

    TEST_CASE("non-chordal input yields a chordless cycle witness")
    {
        auto c5 = cycle_graph(5);
        CHECK(!is_chordal(c5));
        try {
            clique_tree(c5);
            FAIL("expected DomainError");
        }
        catch (const DomainError & e) {
            CHECK(std::string(e.what()).find("chordless cycle") != std::string::npos);
        }
        CHECK(is_chordal(complete_graph(5)));
        CHECK(is_chordal(path_graph(6)));
    }

    TEST_CASE("case partition of a single-bag representation")
    {
        auto k4 = complete_graph(4);
        TreeRepresentation single;
        single.node_count = 1;
        single.bags = {{}, {1, 2, 3, 4}};
        auto part = chordal_case_partition(k4, single, TargetSet::of(k4, {1}), 1);
        CHECK(part.bag_vertices.size() == 4);
        CHECK(part.single_neighbour.empty());
        CHECK(part.double_neighbour.empty());
    }

    TEST_CASE("case partition of the path")
    {
        auto p5 = path_graph(5);
        auto rep = path_decomposition(5);
        auto part = chordal_case_partition(p5, rep, TargetSet::of(p5, {1, 5}), 1);
        CHECK(part.bag_vertices == std::vector<int>{1, 2, 4, 5});
        CHECK(part.single_neighbour.empty());
        REQUIRE(part.double_neighbour.size() == 1);
        CHECK(part.double_neighbour.front().vertices == std::vector<int>{3});
        CHECK(!part.double_neighbour.front().path_nodes.empty());
    }

    TEST_CASE("case partition covers generated chordal instances exactly once")
    {
        for (auto [r, k] : {std::pair{3, 2}, {2, 2}, {3, 4}}) {
            auto inst = gen_chordal_lb(r, k);
            auto rep = clique_tree(inst.graph);
            auto part = chordal_case_partition(inst.graph, rep, inst.target, 1);
            std::vector<int> hits(static_cast<std::size_t>(inst.graph.vertex_count()) + 1, 0);
            for (int v : part.bag_vertices)
                ++hits[static_cast<std::size_t>(v)];
            for (const auto & single : part.single_neighbour)
                for (int v : single.vertices)
                    ++hits[static_cast<std::size_t>(v)];
            for (const auto & doubled : part.double_neighbour)
                for (int v : doubled.vertices)
                    ++hits[static_cast<std::size_t>(v)];
            for (int v = 1; v <= inst.graph.vertex_count(); ++v)
                CHECK(hits[static_cast<std::size_t>(v)] == 1);
        }
    }

    TEST_CASE("case partition needs length at most one")
    {
        auto inst = gen_tl2_lb(4, 4);
        CHECK_THROWS_AS(
            chordal_case_partition(inst.graph, *inst.decomposition, inst.target, 1),
            DomainError);
    }

    TEST_CASE("separator profile bound check")
    {
        auto inst = gen_split_gadget(2, 1);
        std::vector<int> outside;
        for (int v = 3; v <= inst.graph.vertex_count(); ++v)
            outside.push_back(v);
        auto report = separator_profile_bound_check(inst.graph, outside, {1, 2}, {1, 2},
                                                    inst.target, 1, 1);
        CHECK(report.one_separator);
        CHECK(report.profile_count == 3);
        CHECK(report.bound == 12); // (r+2) * 2^|A|
        CHECK(report.ok);

        auto empty = separator_profile_bound_check(inst.graph, {}, {1, 2}, {1, 2}, inst.target, 1, 1);
        CHECK(empty.profile_count == 0);
        CHECK(empty.ok);
    }

    TEST_CASE("separator bound check on random chordal graphs")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto inst = gen_random_partial_ktree(25, 2, 1000, seed);
            auto rep = clique_tree(inst.graph);
            Rng rng(seed + 19);
            auto a = TargetSet{rng.sample_subset(25, 3)};
            auto part = chordal_case_partition(inst.graph, rep, a, 1);
            for (const auto & single : part.single_neighbour) {
                if (single.vertices.empty())
                    continue;
                auto sep = rep.bag(single.anchor);
                auto report = separator_profile_bound_check(inst.graph, single.vertices, sep, sep,
                                                            a, 3, 1);
                CHECK(report.ok);
            }
        }
    }

    TEST_CASE("separator preconditions are enforced with witnesses")
    {
        auto p5 = path_graph(5);
        auto a = TargetSet::of(p5, {1});
        // {4,5} is not separated from the rest by {2}.
        CHECK_THROWS_AS(separator_profile_bound_check(p5, {4, 5}, {2}, {2}, a, 2, 1),
                        PreconditionError);
        // separator side with too large a diameter
        CHECK_THROWS_AS(separator_profile_bound_check(p5, {1, 2}, {3, 5}, {3, 5}, a, 2, 1),
                        PreconditionError);
        // target vertex buried inside the separated set
        CHECK_THROWS_AS(separator_profile_bound_check(p5, {1, 2}, {3}, {3}, a, 2, 1),
                        PreconditionError);
    }
}
