// Core graph representation and generators.
//
// Graphs are simple and undirected, with vertices labeled 0..n-1 and sorted
// adjacency lists.  All generators document their vertex labeling so that
// edge colorings computed on top of them are reproducible across runs.
#pragma once

#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace liec {

// Canonical edge orientation: u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Simple undirected graph.  Invariants:
//   - no self-loops, no parallel edges,
//   - adjacency is symmetric and each list is sorted ascending,
//   - m() == (sum of degrees) / 2.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    explicit Graph(int n_ = 0) : n(n_), adj(n_) {}

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);  // throws std::invalid_argument on loop/dup/range
    int m() const;
    int max_degree() const;
    // All edges in lexicographic (u,v) order with u < v.  This order is the
    // indexing convention for EdgeColoring throughout the library.
    std::vector<Edge> edges() const;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// ------------------------------------------------------------------ families

struct GPSpec {
    int n = 0;  // outer cycle length
    int k = 0;  // inner skip, 1 <= k < n/2
};

// Ring of cycles R (given by its cycle lengths, each >= 3, summing to n)
// joined to an outer cycle C_n by the matching i ~ phi[i].
//
// Vertex layout of gen_ring_permutation:
//   0..n-1            outer cycle, edge i -- (i+1 mod n)
//   n..2n-1           R, cycle c occupying the consecutive block starting at
//                     n + cycle_lengths[0] + ... + cycle_lengths[c-1]
//   spokes            i -- (n + phi[i])
struct RingPermutationSpec {
    int n = 0;
    std::vector<int> cycle_lengths;
    std::vector<int> phi;  // permutation of 0..n-1
};

void validate_spec(const RingPermutationSpec& spec);  // throws if invalid

Graph gen_cycle(int n);      // n >= 3 vertices/edges
Graph gen_path(int edges);   // edges >= 1, path with edges+1 vertices

// Generalized Petersen graph P(n,k):
//   0..n-1     outer cycle u_i, edge u_i -- u_{i+1 mod n}
//   n..2n-1    inner vertices v_i = n+i, edge v_i -- v_{i+k mod n}
//   spokes     u_i -- v_i
Graph gen_generalized_petersen(const GPSpec& spec);

Graph gen_ring_permutation(const RingPermutationSpec& spec);

// P(n,k) expressed as a ring permutation spec (inner k-skip cycles become the
// cycle list of R); gen_ring_permutation of the result is isomorphic to
// gen_generalized_petersen({n,k}).
RingPermutationSpec gp_as_ring_spec(int n, int k);

// The crossed-spoke cycle permutation family XI_n, n >= 2:
//   0..3n-1       outer cycle vertices v_j, edge v_j -- v_{j+1 mod 3n}
//   3n..6n-1      inner cycle vertices u_j = 3n+j, edge u_j -- u_{j+1 mod 3n}
//   spokes        v_{3i} -- u_{3i+1}, v_{3i+1} -- u_{3i}, v_{3i+2} -- u_{3i+2}
// for i = 0..n-1 (crossed pair followed by a straight spoke).  Cubic, girth 4.
Graph gen_xi(int n);

// XI_n expressed as a ring permutation spec (R = the inner 3n-cycle, phi = the
// spoke pattern above).
RingPermutationSpec xi_as_ring_spec(int n);

// Two adjacent hub vertices u=0, v=1 joined by k >= 2 internally disjoint
// paths, each of length 4t+1 (t >= 1).  Bipartite, girth 4t+2, hubs have
// degree k+1, every other vertex degree 2.
Graph gen_theta_family(int k, int t);

// Smallest cubic graph containing two diamonds (K4 minus an edge) joined by a
// bridge between their tips.  Vertices:
//   0..3  first diamond  u1..u4 (u1,u4 the tips; u1u4 missing)
//   4..7  second diamond v1..v4 (v1,v4 the tips; v1v4 missing)
// bridge u1 -- v1 (0 -- 4) and completion edge u4 -- v4 (3 -- 7); 12 edges.
Graph gen_double_diamond_cubic();

// Hard-coded named graphs ("H0", "GP_7_2", "GP_11_2", ...).
Graph builtin_named(const std::string& name);
std::vector<std::string> builtin_names();

// ------------------------------------------------------------------- queries

// Sentinel girth value for forests.
inline constexpr int kGirthInfinity = std::numeric_limits<int>::max();

// Length of a shortest cycle, or kGirthInfinity if the graph is acyclic.
int girth(const Graph& g);

// True iff no edge joins two vertices of equal degree (vacuous without edges).
bool is_locally_irregular(const Graph& g);

// True iff the graph contains no induced K_{1,3}.
bool is_claw_free(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_bipartite(const Graph& g);

// Two vertex-disjoint diamond subgraphs joined by an edge between their tips.
// d1/d2 hold each diamond as {tip adjacent to the bridge, shared, shared,
// far tip}; bridge joins d1[0] and d2[0].
struct DiamondPair {
    std::array<int, 4> d1{};
    std::array<int, 4> d2{};
    Edge bridge;
};

std::optional<DiamondPair> find_diamond_pair(const Graph& g);

}  // namespace liec
