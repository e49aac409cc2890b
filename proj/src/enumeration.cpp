#include "liec/enumeration.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "liec/canonical.hpp"
#include "liec/graph6.hpp"
#include "liec/solver.hpp"

namespace liec {

namespace {

// All-pairs BFS distances; unreachable = a large sentinel safe to add to.
std::vector<std::vector<int>> all_distances(const Graph& g) {
    const int kFar = 1 << 20;
    std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kFar));
    for (int s = 0; s < g.n; ++s) {
        std::queue<int> q;
        d[s][s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[u])
                if (d[s][v] >= kFar) {
                    d[s][v] = d[s][u] + 1;
                    q.push(v);
                }
        }
    }
    return d;
}

struct GrowParams {
    int n_max = 0;
    int girth_min = 3;
    bool claw_free_only = false;
    // When set, prune partial graphs that cannot complete to a 3-regular
    // graph on exactly n_max vertices.
    bool cubic_target = false;
};

// Vertex-augmentation enumeration of connected graphs with maximum degree 3.
// Each level-i child arises from a level-(i-1) parent by attaching a fresh
// vertex to a nonempty set of at most three vertices of degree <= 2.  Every
// connected subcubic graph is reachable: removing a non-cut vertex undoes
// one augmentation step, and both optional restrictions (girth floor,
// claw-freeness) survive vertex deletion, so pruned universes stay closed.
// Isomorph rejection: one canonical-form representative per level.
//
// visit receives each representative (deterministic order: vertex count,
// then canonical string); returning false stops the generation.
void grow(const GrowParams& p, const std::function<bool(const Graph&, int)>& visit) {
    std::vector<std::string> level = {canonical_graph6(Graph(1))};
    for (int n = 1; n <= p.n_max; ++n) {
        std::unordered_set<std::string> next;
        for (const std::string& s : level) {
            Graph g = parse_graph6(s);
            if (!visit(g, n)) return;
            if (n == p.n_max) continue;
            const auto dist = all_distances(g);
            std::vector<int> open;  // attachment candidates
            for (int v = 0; v < g.n; ++v)
                if (g.degree(v) <= 2) open.push_back(v);
            const int o = static_cast<int>(open.size());
            std::vector<int> pick;
            auto attach = [&]() {
                // Cycles created by the new vertex pass through two of its
                // attachment points; the shortest has length dist + 2.
                for (size_t a = 0; a < pick.size(); ++a)
                    for (size_t b = a + 1; b < pick.size(); ++b)
                        if (dist[pick[a]][pick[b]] + 2 < p.girth_min) return;
                Graph h(g.n + 1);
                for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
                for (int v : pick) h.add_edge(v, g.n);
                if (p.cubic_target) {
                    // Deficiency = missing degree toward 3-regularity.  Each
                    // future vertex absorbs at most 3 units and shifts parity
                    // by one, so infeasible partials are cut here.
                    int def = 0;
                    for (int v = 0; v < h.n; ++v) def += 3 - h.degree(v);
                    const int r = p.n_max - h.n;
                    if (def > 3 * r || (def - r) % 2 != 0) return;
                }
                if (p.claw_free_only && !is_claw_free(h)) return;
                next.insert(canonical_graph6(h));
            };
            for (int a = 0; a < o; ++a) {
                pick = {open[a]};
                attach();
                for (int b = a + 1; b < o; ++b) {
                    pick = {open[a], open[b]};
                    attach();
                    for (int c = b + 1; c < o; ++c) {
                        pick = {open[a], open[b], open[c]};
                        attach();
                    }
                }
            }
        }
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end());
    }
}

}  // namespace

void enumerate_cubic(int n, int girth_min, const GraphVisitor& visit) {
    if (n % 2 != 0) throw std::invalid_argument("enumerate_cubic: no cubic graph has odd order");
    if (n < 4 || n > 16) throw std::invalid_argument("enumerate_cubic: order must be in 4..16");
    GrowParams p;
    p.n_max = n;
    p.girth_min = girth_min;
    p.cubic_target = true;
    grow(p, [&](const Graph& g, int lvl) {
        if (lvl < n) return true;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) != 3) return true;
        return visit(g);
    });
}

void enumerate_subcubic_connected(int n_max, const GraphVisitor& visit,
                                  const SubcubicFilter& filter) {
    if (n_max < 1 || n_max > 11)
        throw std::invalid_argument("enumerate_subcubic_connected: order cap must be in 1..11");
    GrowParams p;
    p.n_max = n_max;
    p.girth_min = filter.girth_min;
    p.claw_free_only = filter.claw_free_only;
    grow(p, [&](const Graph& g, int) { return visit(g); });
}

EnumerationReport table1_row(int n, int girth_min) {
    EnumerationReport report;
    report.n = n;
    report.girth_min = girth_min;
    enumerate_cubic(n, girth_min, [&](const Graph& g) {
        ++report.total_graphs;
        if (exists_k_liec(g, 2).status == SolveStatus::kNone) {
            if (exists_k_liec(g, 3).status != SolveStatus::kFound)
                throw std::logic_error(
                    "table1_row: witness without a 3-coloring; counts '=3' and '>=3' diverge");
            ++report.non_two_liec_count;
            report.witnesses.push_back(emit_graph6(g));
        }
        return true;
    });
    return report;
}

std::vector<GPSpec> scan_gp(int n_max) {
    std::vector<GPSpec> out;
    for (int n = 3; n <= n_max; ++n) {
        std::unordered_set<std::string> seen;  // canonical forms already kept for this n
        for (int k = 1; 2 * k < n; ++k) {
            Graph g = gen_generalized_petersen({n, k});
            if (girth(g) < 5) continue;
            if (!seen.insert(canonical_graph6(g)).second) continue;
            if (exists_k_liec(g, 2).status == SolveStatus::kNone) out.push_back({n, k});
        }
    }
    return out;
}

}  // namespace liec
