#pragma once
// Exact machinery for locally irregular edge colorings: verification,
// existence of a k-coloring by pruned backtracking, the least such k, and a
// definition-level decomposability oracle.

#include <optional>
#include <vector>

#include "liec/graph.hpp"

namespace liec {

// Total edge coloring of a host graph.  color[i] is the color (1..k) of the
// i-th edge in the host's lexicographic edge order (Graph::edges()); 0 marks
// an uncolored edge in partial states.
struct EdgeColoring {
    int k = 0;
    std::vector<int> color;
};

// Per-(vertex, color) incidence counts; color slot 0 aggregates uncolored
// edges, so the row sum at a vertex always equals its degree.
struct ColorDegreeTable {
    int k = 0;
    std::vector<int> d;  // flattened (vertex, color), stride k + 1
    int count(int v, int c) const {
        return d[static_cast<std::size_t>(v) * (k + 1) + c];
    }
};

ColorDegreeTable make_color_degree_table(const Graph& g, const EdgeColoring& col);

// Certificate that a coloring is invalid: edge uv has color c and both
// endpoints are incident to exactly `degree` edges of color c.
struct Violation {
    Edge edge;
    int color = 0;
    int degree = 0;
};

// All violations of the local-irregularity condition; empty means every
// color class induces a locally irregular graph.  Throws
// std::invalid_argument if col is not total on g or a color lies outside
// 1..k.
std::vector<Violation> verify_liec(const Graph& g, const EdgeColoring& col);

struct SolveOptions {
    long long node_budget = -1;  // max branch nodes explored; -1 = unlimited
};

enum class SolveStatus {
    kFound,   // a valid coloring was produced
    kNone,    // exhaustive search proved none exists
    kBudget,  // node budget ran out before an answer was certain
};

struct SolveResult {
    SolveStatus status = SolveStatus::kNone;
    std::optional<EdgeColoring> coloring;  // present iff status == kFound
    long long nodes = 0;                   // branch nodes explored
};

// Decide whether g admits a coloring with at most k colors in which every
// color class induces a locally irregular graph.  Pruned backtracking over
// a most-constrained-first edge order with incremental color-degree counts
// and first-seen color symmetry breaking.  Every returned coloring is
// re-checked by verify_liec before being handed back.
SolveResult exists_k_liec(const Graph& g, int k, const SolveOptions& opts = {});

struct ChiResult {
    std::optional<int> value;              // least feasible k, if any <= k_max
    std::optional<EdgeColoring> coloring;  // witness for value
    bool budget_exceeded = false;          // search was cut short by the budget
    long long nodes = 0;                   // branch nodes across all attempts
};

// Least k <= k_max admitting a coloring, or nothing if no k <= k_max works.
// An edgeless graph needs zero colors and yields value 0.  When a node
// budget cuts an attempt short, the result reports budget_exceeded with no
// value (never a false "no").
ChiResult chi_irr(const Graph& g, int k_max, const SolveOptions& opts = {});

// Decide decomposability straight from the definition: can E(g) be
// partitioned into locally irregular subgraphs?  Searches edge partitions
// in restricted-growth (first-seen block) order with the same pruning as
// the solver; a partition never needs more than floor(m/2) blocks because
// every locally irregular graph has at least two edges.  Exponential by
// design; throws std::invalid_argument beyond 16 edges.
bool is_decomposable_oracle(const Graph& g);

}  // namespace liec
