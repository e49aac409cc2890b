#pragma once

#include <optional>
#include <vector>

#include "liec/graph.hpp"
#include "liec/solver.hpp"

namespace liec {

// Record of the spoke replacement applied when no suitable cycle edge joins
// an isolated-in-S vertex to the rest directly: one spoke leaves S and
// another enters, freeing the chosen edge's endpoint.
struct SpokeSwap {
    Edge removed;
    Edge added;
};

// The one-color spanning subgraph driving the 3-coloring of a ring
// permutation graph, plus the bookkeeping that selects the extra cycle edge.
//
// in_s marks the final S (after any swap) against graph.edges() order.
// x1/x2/x3 classify the outer-cycle vertices of the rule-built S, before
// any swap: x1 holds the S-isolated vertices, x2 the vertices matched to
// the last vertex of an odd inner cycle, x3 the rest.  chosen_u/chosen_v
// give the outer-cycle edge added on top of S; chosen_u lies in x1 (or in
// x2 when a swap was needed — after the swap its S-degree is zero) and
// chosen_v lies in x3.
struct SpanningPlan {
    Graph graph;
    std::vector<char> in_s;
    std::vector<int> x1, x2, x3;
    int chosen_u = -1;
    int chosen_v = -1;
    std::optional<SpokeSwap> swap;
};

// Builds S by the parity rules (even inner cycle: all cycle edges plus
// spokes at even positions; odd inner cycle: all cycle edges except the
// closing one, spokes at even positions plus the final position), selects
// the chosen edge, and verifies that S plus the chosen edge is locally
// irregular.  Throws std::invalid_argument for an invalid spec and
// std::logic_error if an internal invariant fails (never happens).
SpanningPlan build_spanning_plan(const RingPermutationSpec& spec);

// Constructive 3-coloring: color 1 is S plus the chosen edge; the
// complementary edges always form a tree, 2-colored with colors 2 and 3 by
// the tree routines (pendant degree-3 edge, then pendant odd path, then odd
// thread, then the bare-even-path base case).  The result is verified
// before returning; no search is involved anywhere on this path.
EdgeColoring color_ring_permutation(const RingPermutationSpec& spec);

}  // namespace liec
