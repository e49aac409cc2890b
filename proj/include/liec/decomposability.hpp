#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "liec/graph.hpp"

namespace liec {

// Classification of a connected graph with respect to the existence of any
// locally irregular edge coloring.  Exactly three shapes admit none: paths
// with an odd number of edges, cycles of odd length, and the triangle-based
// family recognized by FamilyT below.  Everything else is Decomposable.
enum class VerdictTag { kDecomposable, kOddPath, kOddCycle, kFamilyT };

const char* verdict_tag_name(VerdictTag tag);  // "Decomposable", "OddPath", ...

// One detached appendage of a FamilyT member.  An appendage hangs from a
// degree-3 vertex lying on a triangle and is either
//   kEvenPath        — a pendant path with an even number of edges, or
//   kOddPathTriangle — a pendant path with an odd number of edges whose far
//                      end carries a triangle, the triangle's other two
//                      vertices having degree 2.
enum class AppendageShape { kEvenPath, kOddPathTriangle };

struct PeelRecord {
    int attachment = -1;       // degree-3 triangle vertex the appendage hangs from
    AppendageShape shape = AppendageShape::kEvenPath;
    int path_edges = 0;        // edges on the path part, from attachment outward
    // Removed vertices in walk order starting next to the attachment; for
    // kOddPathTriangle the final two entries are the far triangle's
    // degree-2 pair.
    std::vector<int> removed;
};

struct DecomposabilityVerdict {
    VerdictTag tag = VerdictTag::kDecomposable;
    int n = 0;                             // order of the classified graph
    std::vector<PeelRecord> peels;         // outermost appendage first
    std::array<int, 3> base_triangle{{-1, -1, -1}};  // FamilyT core (sorted)

    bool decomposable() const { return tag == VerdictTag::kDecomposable; }
};

// Exact classification by recursive peeling.  Throws std::invalid_argument
// if g is empty or disconnected.
DecomposabilityVerdict classify(const Graph& g);

// Rebuilds the graph a FamilyT verdict describes: start from the base
// triangle and reattach the peeled appendages in reverse order, validating
// each construction step.  The result uses the original vertex labels, so
// for a verdict produced by classify(g) it equals g exactly.  Throws
// std::logic_error if the witness violates the construction rules and
// std::invalid_argument if the verdict is not FamilyT.
Graph replay_family_t_witness(const DecomposabilityVerdict& v);

// Census of verdicts over every connected graph with maximum degree <= 3 on
// at most n_max vertices (via enumerate_subcubic_connected).
struct ClassificationSurvey {
    int n_max = 0;
    std::int64_t total = 0;
    std::int64_t decomposable = 0;
    std::int64_t odd_paths = 0;
    std::int64_t odd_cycles = 0;
    std::int64_t family_t = 0;
    std::vector<std::string> family_t_graph6;  // canonical, emission order
};

ClassificationSurvey classify_all_small(int n_max);

}  // namespace liec
