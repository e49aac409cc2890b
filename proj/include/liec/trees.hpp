#pragma once

#include <optional>
#include <vector>

#include "liec/graph.hpp"
#include "liec/solver.hpp"

namespace liec {

// A shrub is a tree rooted at a vertex of degree 1.  The root's unique
// neighbor is written r_plus.
struct Shrub {
    Graph tree;
    int root = 0;
};

// Result of the almost-locally-irregular 2-coloring of a shrub.  When
// almost is false the coloring is a full 2-LIEC of the tree.  When almost
// is true, the root edge is the only edge of its color at r_plus and the
// coloring restricted to tree - root is a 2-LIEC of tree - root; this is
// the strongest guarantee available (some shrubs, e.g. a single edge,
// admit no full 2-LIEC).
struct AliecResult {
    EdgeColoring coloring;
    bool almost = false;
};

// Always succeeds: every shrub admits such a coloring.  Implemented as a
// bottom-up dynamic program over achievable parent-color degrees, followed
// by a reconstruction pass; the result is re-verified before returning.
// Throws std::invalid_argument on a non-tree or a root of degree != 1, and
// std::invalid_argument for degrees >= 63 (bitmask-backed state sets).
AliecResult shrub_2aliec(const Shrub& s);

// 2-LIEC of a tree containing an edge uv with deg(u) = 1 and deg(v) = 3.
// Recipe: root a shrub at u; if the coloring is only almost locally
// irregular, repair it by recoloring the root edge, or by swapping the two
// colors inside the branch hanging from the neighbor of v whose
// same-colored degree is 3 and then recoloring the root edge if one
// equal-degree pair remains.  Throws std::invalid_argument on precondition
// violations, std::logic_error if repair fails (never happens).
EdgeColoring tree_2liec_pendant_deg3(const Graph& t, int u, int v);

// 2-LIEC of a tree with a pendant path of odd edge count: path[0] is a
// leaf, interior vertices have degree 2, and the final vertex has degree 3.
// Recipe: with one edge, delegate to the pendant-degree-3 routine; with
// more, split off the even prefix, color the residual shrub, and pair-color
// the prefix so the colors differ at the junction.
EdgeColoring tree_2liec_pendant_oddpath(const Graph& t, const std::vector<int>& path);

// 2-LIEC of a tree with an odd thread: `thread` lists an odd number of
// consecutive degree-2 vertices whose two outside neighbors both have
// degree 3.  Recipe: split into two subtrees sharing the thread's first
// vertex, color each by the routines above, and flip one side's colors so
// the two colors differ at the shared vertex.
EdgeColoring tree_2liec_odd_thread(const Graph& t, const std::vector<int>& thread);

// Scanners for the three shapes above; deterministic (first match in label
// order).  Inputs must be trees.
//   - pendant_deg3_edge: an edge {u, v} with deg(u) = 1, deg(v) = 3.
//   - pendant_odd_path: leaf-to-branch path with an odd number of edges
//     whose branch end has degree exactly 3 (vertex list, leaf first).
//   - odd_thread: odd-length run of degree-2 vertices flanked by two
//     degree-3 vertices (interior vertex list only).
std::optional<Edge> find_pendant_deg3_edge(const Graph& t);
std::optional<std::vector<int>> find_pendant_odd_path(const Graph& t);
std::optional<std::vector<int>> find_odd_thread(const Graph& t);

}  // namespace liec
