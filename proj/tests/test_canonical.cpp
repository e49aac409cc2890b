#include <random>
#include <set>

#include "doctest.h"
#include "liec/canonical.hpp"
#include "liec/graph.hpp"
#include "liec/graph6.hpp"
#include "test_util.hpp"

using namespace liec;

TEST_SUITE("canonical") {
    TEST_CASE("refinement splits a path into end and interior classes") {
        Graph p = gen_path(3);  // 0-1-2-3
        auto cls = wl_refinement(p);
        CHECK(cls[0] == cls[3]);
        CHECK(cls[1] == cls[2]);
        CHECK(cls[0] != cls[1]);
    }

    TEST_CASE("refinement is invariant under relabeling") {
        std::mt19937 rng(555001);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = testutil::random_graph(rng, 2 + trial % 9, 0.4);
            auto perm = testutil::random_perm(rng, g.n);
            Graph h = testutil::relabel(g, perm);
            auto cg = wl_refinement(g);
            auto ch = wl_refinement(h);
            for (int v = 0; v < g.n; ++v) CHECK(cg[v] == ch[perm[v]]);
        }
    }

    TEST_CASE("canonical form of every star labeling is the frozen string") {
        // Leaves refine before the center, so the canonical labeling puts the
        // center last: the star on five vertices canonicalizes to "D?{".
        for (int center = 0; center < 5; ++center) {
            Graph g(5);
            for (int v = 0; v < 5; ++v)
                if (v != center) g.add_edge(std::min(v, center), std::max(v, center));
            CHECK(canonical_graph6(g) == "D?{");
        }
    }

    TEST_CASE("canonical string is stable under relabeling") {
        std::mt19937 rng(555002);
        for (int trial = 0; trial < 200; ++trial) {
            Graph g = testutil::random_graph(rng, 1 + trial % 10, 0.35);
            Graph h = testutil::relabel(g, testutil::random_perm(rng, g.n));
            CHECK(canonical_graph6(g) == canonical_graph6(h));
            CHECK(are_isomorphic(g, h));
        }
    }

    TEST_CASE("canonical string is idempotent") {
        std::mt19937 rng(555003);
        for (int trial = 0; trial < 50; ++trial) {
            Graph g = testutil::random_graph(rng, 1 + trial % 9, 0.35);
            std::string s = canonical_graph6(g);
            CHECK(canonical_graph6(parse_graph6(s)) == s);
        }
    }

    TEST_CASE("non-isomorphic graphs with equal degree sequences separate") {
        // Both 2-regular on six vertices; refinement alone cannot split them.
        Graph c6 = gen_cycle(6);
        Graph two_triangles = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        CHECK_FALSE(are_isomorphic(c6, two_triangles));

        Graph c5 = gen_cycle(5);
        Graph triangle_tail = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
        CHECK_FALSE(are_isomorphic(c5, triangle_tail));
    }

    TEST_CASE("size mismatches are rejected quickly") {
        CHECK_FALSE(are_isomorphic(gen_cycle(5), gen_cycle(6)));
        CHECK_FALSE(are_isomorphic(gen_path(3), gen_cycle(4)));
    }

    TEST_CASE("known isomorphic Petersen pairs coincide") {
        // P(7,3) is P(7,2) relabeled (2*3 = -1 mod 7); same at (11,5) vs (11,2).
        CHECK(are_isomorphic(gen_generalized_petersen({7, 2}),
                             gen_generalized_petersen({7, 3})));
        CHECK_FALSE(are_isomorphic(gen_generalized_petersen({9, 2}),
                                   gen_generalized_petersen({9, 3})));
        CHECK(are_isomorphic(gen_generalized_petersen({11, 2}),
                             gen_generalized_petersen({11, 5})));
        CHECK_FALSE(are_isomorphic(gen_generalized_petersen({11, 2}),
                                   gen_generalized_petersen({11, 3})));
    }

    TEST_CASE("ring permutation form of a Petersen graph is isomorphic to it") {
        for (auto [n, k] : {std::pair{5, 2}, std::pair{7, 2}, std::pair{6, 2}, std::pair{8, 3}}) {
            Graph direct = gen_generalized_petersen({n, k});
            Graph viaring = gen_ring_permutation(gp_as_ring_spec(n, k));
            CHECK(are_isomorphic(direct, viaring));
        }
    }

    TEST_CASE("xi ring spec reproduces the xi graph") {
        for (int n : {2, 3}) {
            CHECK(are_isomorphic(gen_xi(n), gen_ring_permutation(xi_as_ring_spec(n))));
        }
    }

    TEST_CASE("distinct small graphs yield distinct canonical strings") {
        std::mt19937 rng(555004);
        std::set<std::string> seen;
        std::vector<Graph> pool = {
            gen_path(1),    gen_path(2), gen_path(3), gen_cycle(3),
            gen_cycle(4),   gen_cycle(5), gen_cycle(6),
            make_graph(4, {{0, 1}, {0, 2}, {0, 3}}),
            make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}),
            make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),
            make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
        };
        for (const Graph& g : pool) {
            std::string s = canonical_graph6(g);
            CHECK(seen.insert(s).second);  // all pairwise distinct
            // And the string really encodes an isomorphic copy.
            CHECK(are_isomorphic(parse_graph6(s), g));
        }
    }
}
