#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "profilekit/bounds.hpp"
#include "profilekit/constructions.hpp"
#include "profilekit/oracles.hpp"
#include "profilekit/rng.hpp"
#include "profilekit/verify.hpp"

using namespace profilekit;
using namespace profilekit::testing;

TEST_SUITE("verify")
{
    TEST_CASE("guarding verification on the path")
    {
        auto g = path_graph(5);
        auto a = TargetSet::of(g, {5});

        GuardingFamily miss;
        miss.sets = {{3}};
        miss.radius = 4;
        miss.member_cap = 1;
        miss.target = a;
        auto bad = verify_guarding(g, a, 4, miss);
        CHECK(!bad.ok);
        REQUIRE(bad.counterexample.has_value());
        CHECK(bad.counterexample->vertex == 4);
        CHECK(bad.counterexample->target == 5);
        CHECK(bad.counterexample->path == std::vector<int>{4, 5});

        GuardingFamily good;
        good.sets = {{4}, {5}};
        good.radius = 1;
        good.member_cap = 1;
        good.target = a;
        CHECK(verify_guarding(g, a, 1, good).ok);

        GuardingFamily whole;
        whole.sets = {{1, 2, 3, 4, 5}};
        whole.radius = 4;
        whole.member_cap = 5;
        whole.target = a;
        CHECK(verify_guarding(g, a, 4, whole).ok);
    }

    TEST_CASE("member cap violations are reported separately")
    {
        auto g = path_graph(4);
        auto a = TargetSet::of(g, {1});
        GuardingFamily fam;
        fam.sets = {{1, 2, 3}};
        fam.radius = 3;
        fam.member_cap = 2;
        fam.target = a;
        auto report = verify_guarding(g, a, 3, fam);
        CHECK(report.ok); // still guards
        REQUIRE(report.cap_violations.size() == 1);
        CHECK(report.cap_violations.front() == 0);
    }

    TEST_CASE("deletion check equals path enumeration on random instances")
    {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            Rng rng(seed);
            int n = 3 + static_cast<int>(seed % 7);
            std::vector<std::pair<int, int>> edges;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v)
                    if (rng.chance(400, 1000))
                        edges.emplace_back(u, v);
            auto g = Graph::from_edges(n, edges);
            auto a = TargetSet{rng.sample_subset(n, 1 + static_cast<int>(rng.below(2)))};
            int r = static_cast<int>(rng.below(4));
            GuardingFamily fam;
            fam.radius = r;
            fam.member_cap = n;
            fam.target = a;
            int members = 1 + static_cast<int>(rng.below(3));
            for (int s = 0; s < members; ++s)
                fam.sets.push_back(
                    rng.sample_subset(n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))));
            CHECK(verify_guarding(g, a, r, fam).ok == oracles::guarding_oracle(g, a, r, fam));
        }
    }

    TEST_CASE("guarding inequality check")
    {
        auto p5 = path_graph(5);
        auto a = TargetSet::of(p5, {1, 5});
        TreeRepresentation rep;
        rep.node_count = 4;
        rep.bags = {{}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
        rep.tree_edges = {{1, 2}, {2, 3}, {3, 4}};
        rep.root = 1;
        auto family = tw_guarding_family(p5, rep, a, 2);
        auto report = guarding_inequality_check(p5, a, 2, family, InnerBound::KtMinor, 3);
        CHECK(report.guarding_ok);
        CHECK(report.pc_measured == 5);
        CHECK(report.ok);

        auto vacuous = guarding_inequality_check(p5, TargetSet{}, 2, GuardingFamily{},
                                                 InnerBound::Universal);
        CHECK(vacuous.ok);

        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            auto inst = gen_random_partial_ktree(18, 2, 900, seed);
            Rng rng(seed + 1);
            auto target = TargetSet{rng.sample_subset(18, 3)};
            auto fam = tw_guarding_family(inst.graph, *inst.decomposition, target, 2);
            CHECK(guarding_inequality_check(inst.graph, target, 2, fam, InnerBound::KtMinor, 4).ok);
            CHECK(guarding_inequality_check(inst.graph, target, 2, fam, InnerBound::Universal).ok);
        }
    }

    TEST_CASE("explicit bound values")
    {
        auto value = [](BoundClass cls, std::map<std::string, long long> params) {
            BoundQuery q;
            q.cls = cls;
            q.params = std::move(params);
            return bound_value(q);
        };
        CHECK(value(BoundClass::Treewidth, {{"t", 1}, {"r", 1}, {"k", 1}}).str() == "256");
        CHECK(value(BoundClass::Outerplanar, {{"r", 0}, {"k", 1}}).str() == "5");
        CHECK(value(BoundClass::Interval, {{"r", 1}, {"k", 1}}).str() == "22");
        CHECK(value(BoundClass::KtMinor, {{"t", 3}, {"r", 2}, {"k", 5}}).str() == "225");
        CHECK(value(BoundClass::GeneralDiam, {{"r", 1}, {"k", 2}}).str() == "8");
        // 4^d (r+2)^(d + t(2r+1)^d) t ceil(log2 r) C(r+2t+2, 2t+2) k at
        // d=1, t=1, r=2, k=1: 4 * 4^6 * 1 * 1 * 15.
        CHECK(value(BoundClass::Balls, {{"d", 1}, {"t", 1}, {"r", 2}, {"k", 1}}).str() == "245760");
        // (4 s^4 (2r+2))^r at s=1, r=2: 24^2.
        CHECK(value(BoundClass::WcolSubdivision, {{"s", 1}, {"r", 2}}).str() == "576");
        CHECK(value(BoundClass::ScolMinor, {{"h", 4}, {"r", 2}}).str() == "15");
        CHECK(value(BoundClass::WcolMinor, {{"h", 4}, {"r", 1}}).str() == "9");
        // subdivision at s=1, r=1: 4 * 1 * 4^(2 + 16 + 1) * 1
        CHECK(value(BoundClass::Subdivision, {{"s", 1}, {"r", 1}, {"k", 1}}) ==
              BigInt(4) * BigInt::pow(4, 19));
        CHECK(value(BoundClass::Minor, {{"h", 4}, {"r", 0}, {"k", 1}}) ==
              BigInt::pow(4, 4) * BigInt(1) * BigInt::pow(4, 6));
        CHECK(value(BoundClass::Chordal, {{"r", 1}, {"k", 3}}).str() ==
              (BigInt(6) * (BigInt(4 * 8) + BigInt(2) * interval_bound(1, 3))).str());
        CHECK(value(BoundClass::Treelength, {{"ell", 2}, {"r", 1}, {"k", 2}}).str() ==
              (BigInt(4) * BigInt(9) * BigInt(13)).str());
        CHECK_THROWS_AS(value(BoundClass::Treewidth, {{"t", 1}, {"r", 1}}), InputError);
        CHECK_THROWS_AS(value(BoundClass::Minor, {{"h", 3}, {"r", 1}, {"k", 1}}), InputError);
    }

    TEST_CASE("bound values are monotone in radius and target size")
    {
        std::vector<std::pair<BoundClass, std::map<std::string, long long>>> cases = {
            {BoundClass::KtMinor, {{"t", 4}}},
            {BoundClass::Treewidth, {{"t", 2}}},
            {BoundClass::Minor, {{"h", 5}}},
            {BoundClass::Outerplanar, {}},
            {BoundClass::Interval, {}},
            {BoundClass::Chordal, {}},
            {BoundClass::Treelength, {{"ell", 2}}},
            {BoundClass::Subdivision, {{"s", 1}}},
            {BoundClass::Balls, {{"d", 1}, {"t", 2}}},
            {BoundClass::GeneralDiam, {}},
        };
        for (auto & [cls, base] : cases) {
            for (int k = 1; k <= 3; ++k) {
                BigInt previous(0);
                for (int r = 1; r <= 4; ++r) {
                    BoundQuery q;
                    q.cls = cls;
                    q.params = base;
                    q.params["r"] = r;
                    q.params["k"] = k;
                    auto current = bound_value(q);
                    CHECK(previous <= current);
                    previous = current;
                }
            }
            for (int r = 2; r <= 3; ++r) {
                BigInt previous(0);
                for (int k = 1; k <= 4; ++k) {
                    BoundQuery q;
                    q.cls = cls;
                    q.params = base;
                    q.params["r"] = r;
                    q.params["k"] = k;
                    auto current = bound_value(q);
                    CHECK(previous <= current);
                    previous = current;
                }
            }
        }
    }

    TEST_CASE("interval signatures separate far vertices from neighbours")
    {
        std::vector<OpenInterval> intervals = {
            {Rational(0), Rational(2)},   // target
            {Rational(1), Rational(3)},   // neighbour
            {Rational(10), Rational(12)}, // far away
        };
        auto g = interval_graph_of(intervals);
        auto a = TargetSet::of(g, {1});
        auto sig = interval_signatures(g, intervals, a, 1);
        CHECK(sig.signatures[2] != sig.signatures[3]);
    }

    TEST_CASE("signature equality implies profile equality on the grid instance")
    {
        auto inst = gen_interval_lb(4, 2);
        auto sig = interval_signatures(inst.graph, *inst.intervals, inst.target, 4);
        auto profiles = profiles_of_all(inst.graph, inst.target, 4);
        for (int u = 1; u <= inst.graph.vertex_count(); ++u) {
            if (inst.target.contains(u))
                continue;
            for (int v = u + 1; v <= inst.graph.vertex_count(); ++v) {
                if (inst.target.contains(v))
                    continue;
                if (sig.signatures[static_cast<std::size_t>(u)] ==
                    sig.signatures[static_cast<std::size_t>(v)])
                    CHECK(profiles[static_cast<std::size_t>(u)] ==
                          profiles[static_cast<std::size_t>(v)]);
            }
        }
    }

    TEST_CASE("signature chains stay within the sweep cap")
    {
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            auto inst = gen_random_interval(30, seed);
            Rng rng(seed + 2);
            auto a = TargetSet{rng.sample_subset(30, 3)};
            int r = 2 + static_cast<int>(seed % 4);
            auto sig = interval_signatures(inst.graph, *inst.intervals, a, r);
            for (std::size_t i = 0; i < sig.left_chains.size(); ++i) {
                std::set<Rational> merged(sig.left_chains[i].begin(), sig.left_chains[i].end());
                merged.insert(sig.right_chains[i].begin(), sig.right_chains[i].end());
                CHECK(static_cast<long long>(merged.size()) <= 2 * r + 6);
            }
            // No interval strictly contains two points of one chain, so at
            // most 2|A| cut points land inside any interval.
            for (int v = 1; v <= 30; ++v) {
                const auto & iv = (*inst.intervals)[static_cast<std::size_t>(v) - 1];
                long long inside = 0;
                for (std::size_t i = 0; i < sig.left_chains.size(); ++i) {
                    long long in_left = 0, in_right = 0;
                    for (const auto & x : sig.left_chains[i])
                        if (iv.lo < x && x < iv.hi)
                            ++in_left;
                    for (const auto & y : sig.right_chains[i])
                        if (iv.lo < y && y < iv.hi)
                            ++in_right;
                    CHECK(in_left <= 2);
                    CHECK(in_right <= 2);
                    inside += in_left + in_right;
                }
                CHECK(inside <= 2 * a.size());
            }
        }
    }

    TEST_CASE("signatures demand a matching certificate")
    {
        auto inst = gen_random_interval(10, 1);
        auto intervals = *inst.intervals;
        intervals.front().hi = intervals.front().hi + Rational(100);
        CHECK_THROWS_AS(interval_signatures(inst.graph, intervals, TargetSet::of(inst.graph, {1}), 2),
                        InputError);
    }

    TEST_CASE("outerplanar level analysis")
    {
        auto c6 = cycle_graph(6);
        std::vector<int> order{1, 2, 3, 4, 5, 6};
        auto a = TargetSet::of(c6, {1, 4});
        auto report = outerplanar_levels(c6, order, 1, a, 3);
        CHECK(report.monotone);
        CHECK(report.sum_ok);
        CHECK(report.levels[1] == std::vector<int>{2, 6});
        CHECK(report.levels[3] == std::vector<int>{4});

        auto star = star_graph(4);
        std::vector<int> star_order{1, 2, 3, 4, 5};
        auto star_report =
            outerplanar_levels(star, star_order, 2, TargetSet::of(star, {2, 4}), 2);
        CHECK(star_report.monotone);
        CHECK(star_report.sum_ok);

        auto p6 = path_graph(6);
        std::vector<int> path_order{1, 2, 3, 4, 5, 6};
        auto path_report = outerplanar_levels(p6, path_order, 2, TargetSet::of(p6, {2, 5}), 3);
        CHECK(path_report.monotone);
    }

    TEST_CASE("level analysis across random outerplanar instances")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto inst = gen_random_mop(14 + static_cast<int>(seed), seed);
            Rng rng(seed + 4);
            int n = inst.graph.vertex_count();
            auto a = TargetSet{rng.sample_subset(n, 3)};
            int r = 1 + static_cast<int>(seed % 5);
            auto report = outerplanar_levels(inst.graph, *inst.circular_order,
                                             a.vertices.front(), a, r);
            CHECK(report.monotone);
            CHECK(report.sum_ok);
        }
    }

    TEST_CASE("level analysis input validation")
    {
        auto p4 = path_graph(4);
        std::vector<int> order{1, 2, 3, 4};
        CHECK_THROWS_AS(outerplanar_levels(p4, order, 2, TargetSet::of(p4, {1}), 2), InputError);
        CHECK_THROWS_AS(outerplanar_levels(p4, {1, 2, 3}, 1, TargetSet::of(p4, {1}), 2), InputError);
        auto disconnected = Graph::from_edges(3, {{1, 2}});
        CHECK_THROWS_AS(
            outerplanar_levels(disconnected, {1, 2, 3}, 1, TargetSet::of(disconnected, {1}), 1),
            DomainError);
    }

    TEST_CASE("order-diameter-dimension corollary")
    {
        auto p8 = path_graph(8);
        auto tw = corollary_check(p8, "treewidth", {{"t", 1}});
        CHECK(tw.metric_dim == 1);
        CHECK(tw.diam == 7);
        CHECK(tw.ok);

        auto c6 = cycle_graph(6);
        auto outer = corollary_check(c6, "outerplanar", {});
        CHECK(outer.metric_dim == 2);
        CHECK(outer.ok);

        auto k4 = complete_graph(4);
        auto chordal = corollary_check(k4, "chordal", {});
        CHECK(chordal.metric_dim == 3);
        CHECK(chordal.ok);

        CHECK_THROWS_AS(corollary_check(Graph::from_edges(2, {}), "outerplanar", {}), DomainError);
    }
}
