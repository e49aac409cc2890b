#include "liec/decomposability.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "liec/canonical.hpp"
#include "liec/enumeration.hpp"
#include "liec/graph6.hpp"

namespace liec {

const char* verdict_tag_name(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::kDecomposable: return "Decomposable";
        case VerdictTag::kOddPath: return "OddPath";
        case VerdictTag::kOddCycle: return "OddCycle";
        case VerdictTag::kFamilyT: return "FamilyT";
    }
    throw std::logic_error("unknown verdict tag");
}

namespace {

// Mutable view used by the peeling loop: adjacency sets plus liveness.
struct Peeler {
    std::vector<std::set<int>> adj;
    std::vector<char> alive;
    int live_count;

    explicit Peeler(const Graph& g)
        : adj(g.n), alive(g.n, 1), live_count(g.n) {
        for (int v = 0; v < g.n; ++v) adj[v].insert(g.adj[v].begin(), g.adj[v].end());
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    void remove_vertex(int v) {
        for (int w : adj[v]) adj[w].erase(v);
        adj[v].clear();
        alive[v] = 0;
        --live_count;
    }

    bool is_edge(int u, int v) const { return adj[u].count(v) != 0; }
};

// Attempts to read off one pendant appendage hanging from v, whose two other
// neighbors x and y form the host triangle.  The walk leaves v toward w and
// follows degree-2 vertices; it ends either at a leaf after an even number
// of edges (even-path appendage) or at a degree-3 vertex after an odd number
// of edges whose remaining two neighbors are an adjacent degree-2 pair
// (odd-path-plus-triangle appendage).
bool match_appendage(const Peeler& p, int v, int w, PeelRecord& out) {
    std::vector<int> walk{w};
    int prev = v, cur = w;
    while (p.degree(cur) == 2) {
        int next = -1;
        for (int z : p.adj[cur])
            if (z != prev) next = z;
        if (next == v) return false;  // wrapped back to the attachment
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    const int len = static_cast<int>(walk.size());  // edges from v to cur
    if (p.degree(cur) == 1) {
        if (len % 2 != 0) return false;
        out = PeelRecord{v, AppendageShape::kEvenPath, len, walk};
        return true;
    }
    if (p.degree(cur) == 3 && len % 2 == 1) {
        int a = -1, b = -1;
        for (int z : p.adj[cur])
            if (z != prev) (a < 0 ? a : b) = z;
        if (b < 0 || a == v || b == v) return false;
        if (p.degree(a) != 2 || p.degree(b) != 2 || !p.is_edge(a, b)) return false;
        for (int z : walk)
            if (z == a || z == b) return false;
        walk.push_back(a);  // walk already ends at cur, the far hub
        walk.push_back(b);
        out = PeelRecord{v, AppendageShape::kOddPathTriangle, len, walk};
        return true;
    }
    return false;
}

bool is_path_graph(const Graph& g) {
    if (g.max_degree() > 2) return false;
    int leaves = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 1) ++leaves;
    // Connected with max degree 2: either a path (two endpoints, or a lone
    // vertex) or a cycle (no vertex of degree < 2).
    return g.n == 1 || leaves == 2;
}

bool has_triangle(const Graph& g) {
    for (const Edge& e : g.edges())
        for (int z : g.adj[e.u])
            if (z != e.v && g.has_edge(z, e.v)) return true;
    return false;
}

}  // namespace

DecomposabilityVerdict classify(const Graph& g) {
    if (g.n == 0) throw std::invalid_argument("classify: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("classify: graph must be connected");

    DecomposabilityVerdict verdict;
    verdict.n = g.n;

    if (g.max_degree() <= 2) {
        if (is_path_graph(g)) {
            verdict.tag = (g.m() % 2 == 1) ? VerdictTag::kOddPath : VerdictTag::kDecomposable;
            return verdict;
        }
        // Connected and 2-regular: a single cycle.
        if (g.n == 3) {
            verdict.tag = VerdictTag::kFamilyT;  // the bare triangle
            verdict.base_triangle = {0, 1, 2};
            return verdict;
        }
        verdict.tag = (g.n % 2 == 1) ? VerdictTag::kOddCycle : VerdictTag::kDecomposable;
        return verdict;
    }
    if (g.max_degree() >= 4 || !has_triangle(g)) {
        // Every non-decomposable graph has maximum degree <= 3, and the
        // triangle-family members all contain a triangle.
        verdict.tag = VerdictTag::kDecomposable;
        return verdict;
    }

    Peeler p(g);
    while (true) {
        if (p.live_count == 3) {
            std::array<int, 3> tri{{-1, -1, -1}};
            int idx = 0;
            for (int v = 0; v < g.n; ++v)
                if (p.alive[v]) tri[idx++] = v;
            // The survivor always contains the host triangle of the last
            // peel, so three live vertices mean the triangle core.
            if (!p.is_edge(tri[0], tri[1]) || !p.is_edge(tri[1], tri[2]) ||
                !p.is_edge(tri[0], tri[2]))
                throw std::logic_error("peeling left three vertices but no triangle");
            verdict.tag = VerdictTag::kFamilyT;
            verdict.base_triangle = tri;
            return verdict;
        }
        bool peeled = false;
        for (int v = 0; v < g.n && !peeled; ++v) {
            if (!p.alive[v] || p.degree(v) != 3) continue;
            std::array<int, 3> nb{};
            int idx = 0;
            for (int z : p.adj[v]) nb[idx++] = z;
            // Try each choice of host-triangle pair among v's neighbors.
            for (int skip = 0; skip < 3 && !peeled; ++skip) {
                const int x = nb[(skip + 1) % 3], y = nb[(skip + 2) % 3];
                if (!p.is_edge(x, y)) continue;
                PeelRecord rec;
                if (!match_appendage(p, v, nb[skip], rec)) continue;
                for (int z : rec.removed) p.remove_vertex(z);
                verdict.peels.push_back(std::move(rec));
                peeled = true;
            }
        }
        if (!peeled) {
            verdict.tag = VerdictTag::kDecomposable;
            verdict.peels.clear();
            return verdict;
        }
    }
}

Graph replay_family_t_witness(const DecomposabilityVerdict& v) {
    if (v.tag != VerdictTag::kFamilyT)
        throw std::invalid_argument("replay_family_t_witness: verdict is not FamilyT");
    if (v.n < 3) throw std::logic_error("witness order below a triangle");
    Graph g(v.n);
    auto need_unused = [&](int z) {
        if (z < 0 || z >= v.n || g.degree(z) != 0)
            throw std::logic_error("witness reuses or exceeds vertex labels");
    };
    for (int z : v.base_triangle) need_unused(z);
    g.add_edge(v.base_triangle[0], v.base_triangle[1]);
    g.add_edge(v.base_triangle[1], v.base_triangle[2]);
    g.add_edge(v.base_triangle[0], v.base_triangle[2]);

    // Reattach appendages innermost-first (classify records outermost-first).
    for (auto it = v.peels.rbegin(); it != v.peels.rend(); ++it) {
        const PeelRecord& rec = *it;
        const int at = rec.attachment;
        if (at < 0 || at >= v.n || g.degree(at) != 2)
            throw std::logic_error("attachment is not a degree-2 vertex");
        bool on_triangle = false;
        for (int zu : g.adj[at])
            for (int zv : g.adj[at])
                if (zu < zv && g.has_edge(zu, zv)) on_triangle = true;
        if (!on_triangle) throw std::logic_error("attachment does not lie on a triangle");

        const int tail = (rec.shape == AppendageShape::kOddPathTriangle) ? 2 : 0;
        if (rec.path_edges + tail != static_cast<int>(rec.removed.size()) ||
            rec.path_edges < 1)
            throw std::logic_error("witness path length mismatch");
        if (rec.shape == AppendageShape::kEvenPath && rec.path_edges % 2 != 0)
            throw std::logic_error("even-path appendage with odd edge count");
        if (rec.shape == AppendageShape::kOddPathTriangle && rec.path_edges % 2 != 1)
            throw std::logic_error("odd-path appendage with even edge count");
        for (int z : rec.removed) need_unused(z);

        int prev = at;
        for (int i = 0; i < rec.path_edges; ++i) {
            g.add_edge(prev, rec.removed[i]);
            prev = rec.removed[i];
        }
        if (rec.shape == AppendageShape::kOddPathTriangle) {
            const int a = rec.removed[rec.path_edges];
            const int b = rec.removed[rec.path_edges + 1];
            g.add_edge(prev, a);
            g.add_edge(prev, b);
            g.add_edge(a, b);
        }
    }
    return g;
}

ClassificationSurvey classify_all_small(int n_max) {
    ClassificationSurvey survey;
    survey.n_max = n_max;
    enumerate_subcubic_connected(n_max, [&](const Graph& g) {
        ++survey.total;
        switch (classify(g).tag) {
            case VerdictTag::kDecomposable: ++survey.decomposable; break;
            case VerdictTag::kOddPath: ++survey.odd_paths; break;
            case VerdictTag::kOddCycle: ++survey.odd_cycles; break;
            case VerdictTag::kFamilyT:
                ++survey.family_t;
                survey.family_t_graph6.push_back(canonical_graph6(g));
                break;
        }
        return true;
    });
    return survey;
}

}  // namespace liec
