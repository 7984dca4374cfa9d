#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "profilekit/colnum.hpp"
#include "profilekit/constructions.hpp"
#include "profilekit/oracles.hpp"
#include "profilekit/rng.hpp"
#include "profilekit/verify.hpp"

using namespace profilekit;
using namespace profilekit::testing;

TEST_SUITE("colnum")
{
    TEST_CASE("ordering validation")
    {
        auto g = path_graph(3);
        CHECK_THROWS_AS(Ordering::from_sequence(3, {1, 1, 2}), InputError);
        CHECK_THROWS_AS(Ordering::from_sequence(3, {1, 2}), InputError);
        auto ord = Ordering::from_sequence(3, {3, 1, 2});
        ord.check(g);
        CHECK(ord.rank(3) == 1);
        CHECK(ord.sequence() == std::vector<int>{3, 1, 2});
    }

    TEST_CASE("weak reachability on the path")
    {
        auto g = path_graph(5);
        auto ord = Ordering::identity(5);
        CHECK(wreach(g, ord, 4, 2) == std::vector<int>{2, 3, 4});
        CHECK(wreach(g, ord, 3, 0) == std::vector<int>{3});
        auto k3 = complete_graph(3);
        CHECK(wreach(k3, Ordering::identity(3), 3, 1) == std::vector<int>{1, 2, 3});
    }

    TEST_CASE("strong reachability on the path")
    {
        auto g = path_graph(5);
        auto ord = Ordering::identity(5);
        CHECK(sreach(g, ord, 4, 2) == std::vector<int>{3, 4});
        CHECK(sreach(g, ord, 2, 0) == std::vector<int>{2});
        // Star with the centre last: every leaf is strongly reachable.
        auto star = star_graph(4);
        auto ord_star = Ordering::from_sequence(5, {2, 3, 4, 5, 1});
        auto reach = sreach(star, ord_star, 1, 1);
        CHECK(reach == std::vector<int>{1, 2, 3, 4, 5});
    }

    TEST_CASE("reach sets match exhaustive path enumeration")
    {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Rng rng(seed);
            int n = 4 + static_cast<int>(seed % 6);
            std::vector<std::pair<int, int>> edges;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v)
                    if (rng.chance(450, 1000))
                        edges.emplace_back(u, v);
            auto g = Graph::from_edges(n, edges);
            auto seq = rng.sample_subset(n, n);
            for (int i = n - 1; i > 0; --i)
                std::swap(seq[static_cast<std::size_t>(i)],
                          seq[rng.below(static_cast<std::uint64_t>(i) + 1)]);
            auto ord = Ordering::from_sequence(n, seq);
            int r = static_cast<int>(seed % 4);
            auto weak = wreach_all(g, ord, r);
            auto strong = sreach_all(g, ord, r);
            for (int v = 1; v <= n; ++v) {
                CHECK(weak[static_cast<std::size_t>(v)] == oracles::wreach_oracle(g, ord, v, r));
                CHECK(strong[static_cast<std::size_t>(v)] == oracles::sreach_oracle(g, ord, v, r));
            }
        }
    }

    TEST_CASE("colouring numbers")
    {
        for (int n : {3, 5, 9}) {
            auto g = path_graph(n);
            auto ord = Ordering::identity(n);
            for (int r = 0; r <= 6; ++r)
                CHECK(wcol_of(g, ord, r) == std::min(r + 1, n));
        }
        auto k4 = complete_graph(4);
        CHECK(wcol_of(k4, Ordering::identity(4), 1) == 4);
        CHECK(scol_of(k4, Ordering::identity(4), 1) == 4);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto inst = gen_random_partial_ktree(20, 2, 850, seed);
            auto ord = degeneracy_ordering(inst.graph);
            for (int r = 0; r <= 3; ++r)
                CHECK(scol_of(inst.graph, ord, r) <= wcol_of(inst.graph, ord, r));
        }
    }

    TEST_CASE("ordering-based guarding family on the path")
    {
        auto g = path_graph(5);
        auto ord = Ordering::identity(5);
        auto a = TargetSet::of(g, {5});
        auto family = colnum_guarding_family(g, ord, a, 1);
        // B = WReach_1[5] = {4,5}; members are their SReach_2 sets.
        std::set<std::vector<int>> expected = {{3, 4}, {4, 5}};
        CHECK(std::set<std::vector<int>>(family.sets.begin(), family.sets.end()) == expected);
        CHECK(verify_guarding(g, a, 1, family).ok);
    }

    TEST_CASE("radius zero guarding family is the target itself")
    {
        auto g = path_graph(6);
        auto a = TargetSet::of(g, {2, 5});
        auto family = colnum_guarding_family(g, Ordering::identity(6), a, 0);
        std::set<std::vector<int>> expected = {{2}, {5}};
        CHECK(std::set<std::vector<int>>(family.sets.begin(), family.sets.end()) == expected);
        CHECK(verify_guarding(g, a, 0, family).ok);
    }

    TEST_CASE("ordering-based guarding family on random partial 2-trees")
    {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            auto inst = gen_random_partial_ktree(40, 2, 900, seed);
            auto ord = degeneracy_ordering(inst.graph);
            Rng rng(seed + 3);
            auto a = TargetSet{rng.sample_subset(40, 4)};
            auto family = colnum_guarding_family(inst.graph, ord, a, 3);
            CHECK(verify_guarding(inst.graph, a, 3, family).ok);
            CHECK(static_cast<long long>(family.sets.size()) <=
                  static_cast<long long>(wcol_of(inst.graph, ord, 3)) * a.size());
            int cap = scol_of(inst.graph, ord, 6);
            for (const auto & member : family.sets)
                CHECK(static_cast<int>(member.size()) <= cap);
        }
    }

    TEST_CASE("degeneracy orderings")
    {
        auto tree = gen_random_partial_ktree(30, 1, 1000, 7);
        CHECK(scol_of(tree.graph, degeneracy_ordering(tree.graph), 1) <= 2);
        auto k5 = complete_graph(5);
        CHECK(scol_of(k5, degeneracy_ordering(k5), 1) == 5);
        auto c4 = cycle_graph(4);
        CHECK(scol_of(c4, degeneracy_ordering(c4), 1) <= 3);
    }

    TEST_CASE("ball intersection graphs")
    {
        auto make_unit_pair = [](long long distance) {
            std::vector<Ball> balls;
            balls.push_back({1, {Rational(0)}, Rational(1)});
            balls.push_back({2, {Rational(distance)}, Rational(1)});
            return BallSet::of(1, balls);
        };
        CHECK(ball_intersection_graph(make_unit_pair(3)).edge_count() == 0);
        CHECK(ball_intersection_graph(make_unit_pair(2)).edge_count() == 1); // tangent

        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto inst = gen_random_balls(10, 1, seed);
            auto g = ball_intersection_graph(*inst.balls);
            // Closed-interval overlap as the second route.
            for (int u = 1; u <= 10; ++u)
                for (int v = u + 1; v <= 10; ++v) {
                    const auto & a = inst.balls->by_id(u);
                    const auto & b = inst.balls->by_id(v);
                    bool overlap = a.center[0] - a.radius <= b.center[0] + b.radius &&
                                   b.center[0] - b.radius <= a.center[0] + a.radius;
                    CHECK(g.has_edge(u, v) == overlap);
                }
        }
    }

    TEST_CASE("diameter ordering")
    {
        std::vector<Ball> balls;
        balls.push_back({1, {Rational(0)}, Rational(3)});
        balls.push_back({2, {Rational(10)}, Rational(1)});
        balls.push_back({3, {Rational(20)}, Rational(2)});
        auto ord = diameter_ordering(BallSet::of(1, balls));
        CHECK(ord.sequence() == std::vector<int>{1, 3, 2});

        std::vector<Ball> equal;
        for (int i = 1; i <= 4; ++i)
            equal.push_back({i, {Rational(i)}, Rational(1)});
        CHECK(diameter_ordering(BallSet::of(1, equal)).sequence() == std::vector<int>{1, 2, 3, 4});

        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto inst = gen_random_balls(12, 1, seed);
            auto order = diameter_ordering(*inst.balls).sequence();
            for (std::size_t i = 0; i + 1 < order.size(); ++i)
                CHECK(inst.balls->by_id(order[i + 1]).radius <= inst.balls->by_id(order[i]).radius);
        }
    }

    TEST_CASE("thinness of interval families")
    {
        std::vector<Ball> disjoint;
        for (int i = 0; i < 4; ++i)
            disjoint.push_back({i + 1, {Rational(10 * i)}, Rational(1)});
        auto t = thinness(BallSet::of(1, disjoint));
        CHECK(t.exact);
        CHECK(t.value == 1);

        std::vector<Ball> nested;
        for (int i = 0; i < 6; ++i)
            nested.push_back({i + 1, {Rational(0)}, Rational(12 - i)});
        CHECK(thinness(BallSet::of(1, nested)).value == 6);

        // Event-sweep oracle: +1 at each interior start, -1 at each end.
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            auto inst = gen_random_balls(14, 1, seed);
            std::vector<std::pair<Rational, int>> events;
            for (const auto & b : inst.balls->balls) {
                events.emplace_back(b.center[0] - b.radius, +1);
                events.emplace_back(b.center[0] + b.radius, -1);
            }
            std::sort(events.begin(), events.end(), [](const auto & a, const auto & b) {
                if (a.first != b.first)
                    return a.first < b.first;
                return a.second < b.second; // close before open at shared points
            });
            long long current = 0, best = 0;
            for (const auto & [point, delta] : events) {
                current += delta;
                best = std::max(best, current);
            }
            auto result = thinness(*inst.balls);
            CHECK(result.exact);
            CHECK(result.value == best);
        }
    }

    TEST_CASE("thinness lower bound in higher dimension")
    {
        std::vector<Ball> pile;
        for (int i = 1; i <= 3; ++i)
            pile.push_back({i, {Rational(0), Rational(0)}, Rational(i)});
        auto t = thinness(BallSet::of(2, pile));
        CHECK(!t.exact);
        CHECK(t.value == 3);
    }
}
