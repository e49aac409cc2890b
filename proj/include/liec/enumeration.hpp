#pragma once
// Isomorph-free generation of small cubic and subcubic graphs, plus the
// derived survey harnesses (counting cubic graphs without a 2-coloring and
// scanning generalized Petersen graphs).

#include <functional>
#include <string>
#include <vector>

#include "liec/graph.hpp"

namespace liec {

// Visitors return true to continue, false to stop the stream early.
using GraphVisitor = std::function<bool(const Graph&)>;

// Exactly one representative per isomorphism class of connected cubic graphs
// on n vertices with girth >= girth_min, in deterministic order.  Built by
// vertex augmentation through connected subcubic intermediates with
// canonical-form isomorph rejection; infeasible partial graphs are pruned by
// degree-deficiency bounds and a girth check at attachment time.
// Requires n even, 4 <= n <= 16.
void enumerate_cubic(int n, int girth_min, const GraphVisitor& visit);

// Optional hereditary restrictions on the enumerated universe.  Both
// properties survive vertex deletion, so pruning with them keeps the
// augmentation complete.
struct SubcubicFilter {
    int girth_min = 3;           // 3 = no restriction for simple graphs
    bool claw_free_only = false;
};

// One representative per isomorphism class of connected graphs with maximum
// degree <= 3 on 1..n_max vertices, in deterministic order (by vertex count,
// then canonical form).  Requires 1 <= n_max <= 11.
void enumerate_subcubic_connected(int n_max, const GraphVisitor& visit,
                                  const SubcubicFilter& filter = {});

struct EnumerationReport {
    int n = 0;
    int girth_min = 3;
    long long total_graphs = 0;       // cubic graphs with girth >= girth_min
    long long non_two_liec_count = 0;  // of those, graphs with no 2-coloring
    std::vector<std::string> witnesses;  // graph6 strings of the counted graphs
};

// Count connected cubic graphs on n vertices with girth >= girth_min that
// admit no 2-coloring.  Every witness is re-checked to admit a 3-coloring;
// a witness that needed 4 colors would throw std::logic_error rather than
// be silently counted.
EnumerationReport table1_row(int n, int girth_min);

// All generalized Petersen specs (n, k) with 3 <= n <= n_max, 1 <= k < n/2,
// girth >= 5, whose graph admits no 2-coloring.  Isomorphic duplicates --
// P(n,k) ~ P(n,l) happens for several (k,l) pairs -- are removed by
// canonical-form comparison within each n, keeping the smallest k.
std::vector<GPSpec> scan_gp(int n_max);

}  // namespace liec
