#include "liec/solver.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace liec {

ColorDegreeTable make_color_degree_table(const Graph& g, const EdgeColoring& col) {
    const auto edges = g.edges();
    if (col.color.size() != edges.size())
        throw std::invalid_argument("coloring size does not match edge count");
    ColorDegreeTable t;
    t.k = col.k;
    t.d.assign(static_cast<std::size_t>(g.n) * (col.k + 1), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int c = col.color[i];
        if (c < 0 || c > col.k)
            throw std::invalid_argument("edge color out of range: " + std::to_string(c));
        ++t.d[static_cast<std::size_t>(edges[i].u) * (col.k + 1) + c];
        ++t.d[static_cast<std::size_t>(edges[i].v) * (col.k + 1) + c];
    }
    return t;
}

std::vector<Violation> verify_liec(const Graph& g, const EdgeColoring& col) {
    const auto edges = g.edges();
    if (col.color.size() != edges.size())
        throw std::invalid_argument("coloring size does not match edge count");
    for (int c : col.color)
        if (c < 1 || c > col.k)
            throw std::invalid_argument("edge color out of range: " + std::to_string(c));
    const ColorDegreeTable t = make_color_degree_table(g, col);
    std::vector<Violation> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int c = col.color[i];
        const int du = t.count(edges[i].u, c);
        const int dv = t.count(edges[i].v, c);
        if (du == dv) out.push_back({edges[i], c, du});
    }
    return out;
}

namespace {

// Backtracking state.  Edges are assigned along a static most-constrained
// order; cnt holds per-(vertex, color) incidence counts and unc the number
// of still-uncolored edges at each vertex.  The local-irregularity test for
// an edge can only be decided once both endpoints are fully colored, so
// each complete-complete edge pair is checked exactly when its later
// endpoint completes.
struct Search {
    int n, k, m;
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<int, int>>> inc;  // v -> (edge idx, other end)
    std::vector<int> order;                             // position -> edge index
    std::vector<int> color;                             // per edge, 0 = uncolored
    std::vector<int> cnt;                               // (v, c), stride k + 1
    std::vector<int> unc;
    std::vector<int> found;  // snapshot of a completed valid assignment
    long long nodes = 0;
    long long budget = -1;

    enum class R { kFound, kNone, kCut };

    Search(const Graph& g, int k_)
        : n(g.n), k(k_), m(g.m()), edges(g.edges()) {
        inc.assign(n, {});
        for (int i = 0; i < m; ++i) {
            inc[edges[i].u].push_back({i, edges[i].v});
            inc[edges[i].v].push_back({i, edges[i].u});
        }
        build_order(g);
        color.assign(m, 0);
        cnt.assign(static_cast<std::size_t>(n) * (k + 1), 0);
        unc.assign(n, 0);
        for (int v = 0; v < n; ++v) unc[v] = g.degree(v);
    }

    // Static search order: seed with an edge of maximum endpoint degree sum,
    // then repeatedly take the edge touching the most already-ordered edges
    // (ties: larger degree sum, then lower index).  Conflicts localize early
    // because vertices complete soon after their first edge is reached.
    void build_order(const Graph& g) {
        std::vector<std::vector<int>> edge_adj(m);
        for (int v = 0; v < n; ++v)
            for (auto [e1, w1] : inc[v])
                for (auto [e2, w2] : inc[v])
                    if (e1 != e2) edge_adj[e1].push_back(e2);
        auto degsum = [&](int e) {
            return g.degree(edges[e].u) + g.degree(edges[e].v);
        };
        std::vector<char> used(m, 0);
        std::vector<int> adj_ordered(m, 0);
        order.reserve(m);
        for (int step = 0; step < m; ++step) {
            int best = -1;
            for (int e = 0; e < m; ++e) {
                if (used[e]) continue;
                if (best == -1) {
                    best = e;
                    continue;
                }
                if (step == 0 ? degsum(e) > degsum(best)
                              : (adj_ordered[e] > adj_ordered[best] ||
                                 (adj_ordered[e] == adj_ordered[best] &&
                                  degsum(e) > degsum(best))))
                    best = e;
            }
            used[best] = 1;
            order.push_back(best);
            for (int e2 : edge_adj[best]) ++adj_ordered[e2];
        }
    }

    int& count(int v, int c) { return cnt[static_cast<std::size_t>(v) * (k + 1) + c]; }

    // w has just become fully colored: every incident edge whose other end
    // is also complete must have distinct color-degrees at its endpoints.
    bool complete_ok(int w) {
        for (auto [ei, x] : inc[w]) {
            const int c = color[ei];
            if (unc[x] == 0 && count(w, c) == count(x, c)) return false;
        }
        return true;
    }

    R dfs(int depth, int max_used) {
        if (depth == m) {
            found = color;
            return R::kFound;
        }
        const int e = order[depth];
        const int u = edges[e].u, v = edges[e].v;
        const int top = std::min(max_used + 1, k);
        for (int c = 1; c <= top; ++c) {
            if (budget >= 0 && nodes >= budget) return R::kCut;
            ++nodes;
            color[e] = c;
            ++count(u, c);
            ++count(v, c);
            --unc[u];
            --unc[v];
            bool ok = unc[u] > 0 || complete_ok(u);
            if (ok && unc[v] == 0) ok = complete_ok(v);
            R r = R::kNone;
            if (ok) r = dfs(depth + 1, std::max(max_used, c));
            ++unc[u];
            ++unc[v];
            --count(u, c);
            --count(v, c);
            color[e] = 0;
            if (r != R::kNone) return r;
        }
        return R::kNone;
    }
};

}  // namespace

SolveResult exists_k_liec(const Graph& g, int k, const SolveOptions& opts) {
    if (k < 1) throw std::invalid_argument("exists_k_liec: k must be >= 1");
    SolveResult res;
    if (g.m() == 0) {
        res.status = SolveStatus::kFound;
        res.coloring = EdgeColoring{k, {}};
        return res;
    }
    Search s(g, k);
    s.budget = opts.node_budget;
    const Search::R r = s.dfs(0, 0);
    res.nodes = s.nodes;
    switch (r) {
        case Search::R::kFound: {
            EdgeColoring col{k, std::move(s.found)};
            if (!verify_liec(g, col).empty())
                throw std::logic_error("solver produced an invalid coloring");
            res.status = SolveStatus::kFound;
            res.coloring = std::move(col);
            break;
        }
        case Search::R::kCut:
            res.status = SolveStatus::kBudget;
            break;
        case Search::R::kNone:
            res.status = SolveStatus::kNone;
            break;
    }
    return res;
}

ChiResult chi_irr(const Graph& g, int k_max, const SolveOptions& opts) {
    if (k_max < 1) throw std::invalid_argument("chi_irr: k_max must be >= 1");
    ChiResult res;
    if (g.m() == 0) {
        res.value = 0;
        res.coloring = EdgeColoring{0, {}};
        return res;
    }
    for (int k = 1; k <= k_max; ++k) {
        SolveResult r = exists_k_liec(g, k, opts);
        res.nodes += r.nodes;
        if (r.status == SolveStatus::kFound) {
            res.value = k;
            res.coloring = std::move(r.coloring);
            return res;
        }
        if (r.status == SolveStatus::kBudget) {
            res.budget_exceeded = true;  // minimality can no longer be certified
            return res;
        }
    }
    return res;
}

bool is_decomposable_oracle(const Graph& g) {
    const int m = g.m();
    if (m > 16)
        throw std::invalid_argument("decomposability oracle limited to 16 edges");
    if (m == 0) return true;
    // A partition with first-seen block numbering is exactly a restricted-
    // growth coloring, so the k-coloring search with k = floor(m/2) covers
    // all candidate partitions.
    const int k = std::max(1, m / 2);
    return exists_k_liec(g, k).status == SolveStatus::kFound;
}

}  // namespace liec
