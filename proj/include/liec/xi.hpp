#pragma once

#include <array>
#include <string>
#include <vector>

namespace liec {

// One boundary descriptor of a crossed-spoke tile coloring: the color of
// the half-edge leaving the tile at a boundary vertex ('a' or 'b') and the
// number of edges of that color incident with the vertex, half-edge
// included (1..3, the vertex has degree 3).
struct XiHalf {
    char color = 'a';
    int mult = 0;
};

inline bool operator==(const XiHalf& x, const XiHalf& y) {
    return x.color == y.color && x.mult == y.mult;
}

// Rank in the fixed descriptor order a3 > a2 > a1 > b1 > b2 > b3 (0 is the
// largest).  The order is the normalization key for code quadruples.
int xi_half_rank(const XiHalf& h);

// Boundary code (p,q,r,s) of a 2-color locally irregular coloring of one
// crossed-spoke tile of gen_xi: descriptors at the four half-edge vertices
// in the order left outer, left inner, right outer, right inner
// (v_{3i}, u_{3i}, v_{3i+2}, u_{3i+2} in the gen_xi layout).
struct XiCode {
    std::array<XiHalf, 4> part;
};

inline bool operator==(const XiCode& x, const XiCode& y) { return x.part == y.part; }
bool operator<(const XiCode& x, const XiCode& y);  // rank-lexicographic

std::string xi_code_to_string(const XiCode& c);  // "(a3,a3,a1,b3)"
XiCode xi_code_from_string(const std::string& s);  // inverse; throws on junk

// All ordered boundary codes: enumerate every 2-coloring of the 7 tile
// edges plus 4 half-edges, keep the internally locally irregular ones
// (half-edges count toward color degrees; every tile edge's endpoints must
// differ in its color's degree), and keep a code only if p >= q and r >= s
// in the descriptor order.  The tile's symmetries swap each boundary pair
// freely, so the ordered codes represent all of them.  Returns exactly 24
// codes, sorted rank-lexicographically.
std::vector<XiCode> enumerate_xi_codes();

// Compatibility digraph over the 16 ordered codes that can ever appear in
// a closed chain of tiles (the 8 codes with p == q of multiplicity 2 have
// no possible predecessor and are dropped).  codes[i] carries the fixed
// public label c{i+1}; the labeling order is part of this module's output
// contract and groups each strong component contiguously.
//
// An arc i -> j means a tile colored codes[i] can stand immediately left
// of one colored codes[j]: the two connecting edges are the matched
// half-edge pairs, so matched descriptors must agree in color and differ
// in multiplicity, either straight (r with p', s with q') or crossed
// (r with q', s with p') -- the boundary-pair swap symmetry makes both
// orientations available.
struct CodeDigraph {
    std::vector<XiCode> codes;           // the 16 labeled codes, c1..c16
    std::vector<std::vector<int>> arcs;  // arcs[i] = sorted targets of i
    std::vector<std::vector<int>> scc;   // strong components, each sorted,
                                         // ordered by smallest member
};

// Builds the digraph above and computes its strong components.  Throws
// std::logic_error if the enumerated code set disagrees with the fixed
// labeling table (a failed cross-check is reported, never patched over).
const CodeDigraph& code_digraph();

// True iff the compatibility digraph has a closed walk of exactly n arcs,
// i.e. iff gen_xi(n) admits a 2-color locally irregular coloring.  Decided
// by boolean matrix powering.  Throws std::invalid_argument for n < 2.
bool xi_two_liec_exists(int n);

// Graphviz dot text of the digraph, one node per labeled code.
std::string code_digraph_dot(const CodeDigraph& d);

// JSON object with the labeled codes, adjacency lists, and components.
std::string code_digraph_json(const CodeDigraph& d);

}  // namespace liec
