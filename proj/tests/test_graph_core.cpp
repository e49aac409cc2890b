#include <queue>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "liec/graph.hpp"
#include "test_util.hpp"

using namespace liec;

namespace {

// Independent girth oracle: for every edge uv, the shortest cycle through uv
// is 1 + (shortest u-v path avoiding uv).  Quadratic and obviously correct.
int brute_girth(const Graph& g) {
    int best = kGirthInfinity;
    for (const Edge& e : g.edges()) {
        std::vector<int> dist(g.n, -1);
        std::queue<int> q;
        dist[e.u] = 0;
        q.push(e.u);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u]) {
                if (u == e.u && v == e.v) continue;  // skip uv itself
                if (u == e.v && v == e.u) continue;
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
            }
        }
        if (dist[e.v] != -1 && dist[e.v] + 1 < best) best = dist[e.v] + 1;
    }
    return best;
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("edges are lexicographic regardless of insertion order") {
        Graph g = make_graph(4, {{2, 3}, {0, 2}, {0, 1}});
        auto e = g.edges();
        REQUIRE(e.size() == 3);
        CHECK(e[0] == Edge{0, 1});
        CHECK(e[1] == Edge{0, 2});
        CHECK(e[2] == Edge{2, 3});
        CHECK(g.m() == 3);
        CHECK(g.has_edge(3, 2));
        CHECK_FALSE(g.has_edge(1, 3));
    }

    TEST_CASE("add_edge rejects loops, duplicates, out-of-range") {
        Graph g(3);
        g.add_edge(0, 1);
        CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
        CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
        CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
        CHECK(g.m() == 1);
    }

    TEST_CASE("cycle and path generators") {
        Graph c4 = gen_cycle(4);
        CHECK(c4.n == 4);
        CHECK(c4.m() == 4);
        for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
        Graph p1 = gen_path(1);
        CHECK(p1.n == 2);
        CHECK(p1.m() == 1);
        Graph p5 = gen_path(5);
        CHECK(p5.n == 6);
        CHECK(p5.m() == 5);
        CHECK(is_tree(p5));
        CHECK_FALSE(is_tree(c4));
        CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
        CHECK_THROWS_AS(gen_path(0), std::invalid_argument);
    }

    TEST_CASE("generalized Petersen structure") {
        Graph pet = gen_generalized_petersen({5, 2});
        CHECK(pet.n == 10);
        CHECK(pet.m() == 15);
        CHECK(pet.max_degree() == 3);
        for (int v = 0; v < pet.n; ++v) CHECK(pet.degree(v) == 3);
        CHECK(girth(pet) == 5);
        CHECK(is_connected(pet));

        Graph gp72 = gen_generalized_petersen({7, 2});
        CHECK(gp72.n == 14);
        CHECK(gp72.m() == 21);
        CHECK(girth(gp72) == 5);
        CHECK_FALSE(is_bipartite(gp72));

        Graph gp112 = gen_generalized_petersen({11, 2});
        CHECK(gp112.n == 22);
        CHECK(gp112.m() == 33);
        CHECK(girth(gp112) == 5);

        CHECK_THROWS_AS(gen_generalized_petersen({6, 3}), std::invalid_argument);
        CHECK_THROWS_AS(gen_generalized_petersen({5, 0}), std::invalid_argument);
    }

    TEST_CASE("ring permutation spec validation") {
        RingPermutationSpec ok;
        ok.n = 6;
        ok.cycle_lengths = {3, 3};
        ok.phi = {0, 1, 2, 3, 4, 5};
        CHECK_NOTHROW(validate_spec(ok));
        Graph g = gen_ring_permutation(ok);
        CHECK(g.n == 12);
        CHECK(g.m() == 18);
        for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 3);

        RingPermutationSpec bad = ok;
        bad.cycle_lengths = {4, 3};
        CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);
        bad = ok;
        bad.phi[5] = 0;
        CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);
        bad = ok;
        bad.cycle_lengths = {2, 2, 2};
        CHECK_THROWS_AS(validate_spec(bad), std::invalid_argument);
    }

    TEST_CASE("gp_as_ring_spec reproduces the inner cycle structure") {
        // gcd(6,2)=2: two inner triangles.
        RingPermutationSpec s = gp_as_ring_spec(6, 2);
        CHECK(s.cycle_lengths == std::vector<int>{3, 3});
        CHECK_NOTHROW(validate_spec(s));
        // gcd(7,2)=1: one 7-cycle.
        s = gp_as_ring_spec(7, 2);
        CHECK(s.cycle_lengths == std::vector<int>{7});
        CHECK_NOTHROW(validate_spec(s));
    }

    TEST_CASE("xi family structure") {
        for (int n : {2, 3, 4}) {
            Graph g = gen_xi(n);
            CHECK(g.n == 6 * n);
            CHECK(g.m() == 9 * n);
            for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 3);
            CHECK(is_connected(g));
            CHECK(girth(g) == 4);
            RingPermutationSpec s = xi_as_ring_spec(n);
            CHECK_NOTHROW(validate_spec(s));
        }
        CHECK_THROWS_AS(gen_xi(1), std::invalid_argument);
    }

    TEST_CASE("theta family structure") {
        // Two adjacent hubs plus k internally disjoint paths of 4t+1 edges.
        for (auto [k, t] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
            Graph g = gen_theta_family(k, t);
            CHECK(g.n == 2 + k * 4 * t);
            CHECK(g.m() == 1 + k * (4 * t + 1));
            CHECK(g.degree(0) == k + 1);
            CHECK(g.degree(1) == k + 1);
            for (int v = 2; v < g.n; ++v) CHECK(g.degree(v) == 2);
            CHECK(is_bipartite(g));
            CHECK(girth(g) == 4 * t + 2);
            CHECK(is_connected(g));
        }
        CHECK_THROWS_AS(gen_theta_family(1, 1), std::invalid_argument);
        CHECK_THROWS_AS(gen_theta_family(2, 0), std::invalid_argument);
    }

    TEST_CASE("double diamond is cubic with twelve edges") {
        Graph g = gen_double_diamond_cubic();
        CHECK(g.n == 8);
        CHECK(g.m() == 12);
        for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == 3);
        CHECK(is_connected(g));
        CHECK(girth(g) == 3);
    }

    TEST_CASE("builtins resolve and unknown names throw") {
        for (const auto& name : builtin_names()) {
            Graph g = builtin_named(name);
            CHECK(g.n > 0);
            CHECK(is_connected(g));
        }
        CHECK_THROWS_AS(builtin_named("no_such_graph"), std::invalid_argument);
    }

    TEST_CASE("girth matches the per-edge oracle") {
        CHECK(girth(gen_cycle(5)) == 5);
        CHECK(girth(make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 3);
        CHECK(girth(gen_path(4)) == kGirthInfinity);
        CHECK(girth(Graph(3)) == kGirthInfinity);

        std::mt19937 rng(20260822);
        for (int trial = 0; trial < 60; ++trial) {
            Graph g = testutil::random_graph(rng, 3 + trial % 8, 0.35);
            CHECK(girth(g) == brute_girth(g));
        }
        for (const auto& name : builtin_names()) {
            Graph g = builtin_named(name);
            CHECK(girth(g) == brute_girth(g));
        }
    }

    TEST_CASE("local irregularity of whole graphs") {
        CHECK(is_locally_irregular(gen_path(2)));
        CHECK_FALSE(is_locally_irregular(gen_path(1)));   // the single edge
        CHECK_FALSE(is_locally_irregular(gen_path(3)));   // middle edge ties
        CHECK_FALSE(is_locally_irregular(gen_cycle(4)));  // regular
        CHECK(is_locally_irregular(make_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
        CHECK(is_locally_irregular(Graph(3)));  // vacuous without edges
    }

    TEST_CASE("claw detection") {
        CHECK_FALSE(is_claw_free(make_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
        CHECK(is_claw_free(gen_cycle(5)));
        CHECK(is_claw_free(gen_path(4)));
        CHECK(is_claw_free(make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
        CHECK_FALSE(is_claw_free(gen_generalized_petersen({5, 2})));  // girth 5, cubic
        // Diamond: neighbors of a shared vertex include an adjacent pair.
        CHECK(is_claw_free(make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})));
    }

    TEST_CASE("connectivity, trees, bipartiteness") {
        Graph two_parts = make_graph(4, {{0, 1}, {2, 3}});
        CHECK_FALSE(is_connected(two_parts));
        CHECK(is_connected(gen_cycle(6)));
        CHECK(is_bipartite(gen_cycle(6)));
        CHECK_FALSE(is_bipartite(gen_cycle(5)));
        CHECK(is_bipartite(two_parts));
        CHECK(is_tree(gen_path(3)));
        CHECK_FALSE(is_tree(two_parts));
    }

    TEST_CASE("diamond pair location on the double diamond") {
        Graph g = gen_double_diamond_cubic();
        auto found = find_diamond_pair(g);
        REQUIRE(found.has_value());
        // Both diamonds really are diamonds and the bridge joins their tips.
        for (const auto& d : {found->d1, found->d2}) {
            CHECK(g.has_edge(d[0], d[1]));
            CHECK(g.has_edge(d[0], d[2]));
            CHECK(g.has_edge(d[1], d[2]));
            CHECK(g.has_edge(d[1], d[3]));
            CHECK(g.has_edge(d[2], d[3]));
            CHECK_FALSE(g.has_edge(d[0], d[3]));
        }
        CHECK(found->bridge == Edge{std::min(found->d1[0], found->d2[0]),
                                    std::max(found->d1[0], found->d2[0])});
        CHECK(g.has_edge(found->bridge.u, found->bridge.v));

        CHECK_FALSE(find_diamond_pair(gen_cycle(6)).has_value());
        CHECK_FALSE(find_diamond_pair(gen_generalized_petersen({5, 2})).has_value());
        // A single diamond is not a pair.
        CHECK_FALSE(
            find_diamond_pair(make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}))
                .has_value());
    }
}
