#include "liec/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "liec/graph6.hpp"

namespace liec {

namespace {

// One stabilization pass family: repeatedly renumber vertex colors by the
// sorted (own color, multiset of neighbor colors) signature until the
// partition stops changing.  Ids are assigned in lexicographic key order, so
// they depend only on isomorphism-invariant data, never on vertex labels.
std::vector<int> refine(const Graph& g, std::vector<int> color) {
    const int n = g.n;
    for (int round = 0; round <= n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key;
            key.reserve(g.degree(v) + 1);
            key.push_back(color[v]);
            for (int w : g.adj[v]) key.push_back(color[w]);
            std::sort(key.begin() + 1, key.end());
            sig[v] = {std::move(key), v};
        }
        std::map<std::vector<int>, int> ids;
        for (const auto& [key, v] : sig) ids.emplace(key, 0);
        int next = 0;
        for (auto& [key, id] : ids) id = next++;
        std::vector<int> fresh(n);
        for (const auto& [key, v] : sig) fresh[v] = ids[key];
        if (fresh == color) break;  // stable
        color = std::move(fresh);
    }
    return color;
}

// Individualization-refinement canonical labeling.  At each node the stable
// coloring either is discrete (a bijection vertices -> 0..n-1, yielding one
// candidate labeling) or has a first non-singleton class; every vertex of
// that class is individualized in turn and the search recurses.  The set of
// discrete leaves reached this way is isomorphism-invariant, so the minimum
// graph6 string over all leaves is a canonical form.  No automorphism
// pruning: leaves are enumerated exhaustively, which is fine at desk scale.
struct CanonSearch {
    const Graph& g;
    std::vector<uint64_t> row;  // adjacency bitmasks (n <= 62)
    std::string best;
    bool have_best = false;

    explicit CanonSearch(const Graph& g_) : g(g_), row(g_.n, 0) {
        for (int u = 0; u < g.n; ++u)
            for (int v : g.adj[u]) row[u] |= uint64_t{1} << v;
    }

    void run(const std::vector<int>& color) {
        // Locate the first class with two or more members.
        std::vector<int> members;
        for (int target = 0;; ++target) {
            members.clear();
            for (int v = 0; v < g.n; ++v)
                if (color[v] == target) members.push_back(v);
            if (members.empty()) {
                leaf(color);  // discrete: ids are exactly 0..n-1
                return;
            }
            if (members.size() > 1) break;
        }
        // Cellmates whose neighborhoods agree outside the pair are swapped by
        // an automorphism, so individualizing one of them suffices.  This
        // keeps refinement-blind cases (edgeless or complete cells) linear
        // instead of factorial.
        for (size_t a = 0; a < members.size(); ++a) {
            const int v = members[a];
            bool twin_of_earlier = false;
            for (size_t b = 0; b < a && !twin_of_earlier; ++b) {
                const int w = members[b];
                const uint64_t both = (uint64_t{1} << v) | (uint64_t{1} << w);
                twin_of_earlier = (row[v] | both) == (row[w] | both);
            }
            if (twin_of_earlier) continue;
            // Split v from its class: double every color and nudge v below
            // its peers, then restabilize.
            std::vector<int> split(g.n);
            for (int u = 0; u < g.n; ++u) split[u] = 2 * color[u] + 1;
            split[v] -= 1;
            run(refine(g, std::move(split)));
        }
    }

    void leaf(const std::vector<int>& pos) {
        Graph relabeled(g.n);
        for (int u = 0; u < g.n; ++u)
            for (int v : g.adj[u])
                if (u < v) relabeled.add_edge(pos[u], pos[v]);
        std::string s = emit_graph6(relabeled);
        if (!have_best || s < best) {
            best = std::move(s);
            have_best = true;
        }
    }
};

}  // namespace

std::vector<int> wl_refinement(const Graph& g) {
    std::vector<int> degrees(g.n);
    for (int v = 0; v < g.n; ++v) degrees[v] = g.degree(v);
    return refine(g, std::move(degrees));
}

std::string canonical_graph6(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("canonical_graph6: supports at most 62 vertices");
    if (g.n == 0) return emit_graph6(g);
    CanonSearch search(g);
    search.run(wl_refinement(g));
    return search.best;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    return canonical_graph6(a) == canonical_graph6(b);
}

}  // namespace liec
