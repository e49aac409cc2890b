// Canonical forms for isomorphism rejection at desk scale (n <= 62).
//
// The canonical form of a graph is the lexicographically smallest graph6
// string over a restricted but isomorphism-invariant set of vertex orderings:
// vertices are grouped by their stable color-refinement class (classes in
// canonical order), and a branch-and-bound search minimizes the adjacency
// bit string within that constraint.  Equal canonical strings correspond
// exactly to isomorphic graphs, because the string encodes the adjacency and
// the ordering constraint depends only on isomorphism-invariant data.
#pragma once

#include <string>
#include <vector>

#include "liec/graph.hpp"

namespace liec {

// Stable 1-dimensional color refinement (iterated neighborhood-multiset
// splitting).  Returns a class id per vertex; ids are canonical, i.e. two
// isomorphic graphs get identical multisets and corresponding vertices get
// equal ids.  Ids are ordered so that class 0 sorts first in the canonical
// vertex ordering.
std::vector<int> wl_refinement(const Graph& g);

// Canonical graph6 string; equal strings iff isomorphic graphs.
std::string canonical_graph6(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace liec
