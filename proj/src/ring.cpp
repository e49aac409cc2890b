#include "liec/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "liec/trees.hpp"

namespace liec {

namespace {

int edge_index(const std::vector<Edge>& edges, int u, int v) {
    Edge key{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || !(*it == key))
        throw std::logic_error("edge lookup failed");
    return static_cast<int>(it - edges.begin());
}

// Degrees within the subgraph selected by `take`.
std::vector<int> selected_degrees(const Graph& g, const std::vector<Edge>& edges,
                                  const std::vector<char>& take) {
    std::vector<int> d(g.n, 0);
    for (size_t i = 0; i < edges.size(); ++i)
        if (take[i]) {
            ++d[edges[i].u];
            ++d[edges[i].v];
        }
    return d;
}

void require_locally_irregular(const std::vector<Edge>& edges,
                               const std::vector<char>& take,
                               const std::vector<int>& d, const char* what) {
    for (size_t i = 0; i < edges.size(); ++i)
        if (take[i] && d[edges[i].u] == d[edges[i].v])
            throw std::logic_error(std::string(what) +
                                   ": selected subgraph is not locally irregular");
}

}  // namespace

SpanningPlan build_spanning_plan(const RingPermutationSpec& spec) {
    validate_spec(spec);
    SpanningPlan plan;
    plan.graph = gen_ring_permutation(spec);
    const Graph& g = plan.graph;
    const auto edges = g.edges();
    const int n = spec.n;

    std::vector<int> inv_phi(n);
    for (int i = 0; i < n; ++i) inv_phi[spec.phi[i]] = i;

    // Rule-built S.  Inner cycle i occupies offsets [start, start + len);
    // position t (1-based) is offset start + t - 1, global vertex n + offset.
    plan.in_s.assign(edges.size(), 0);
    int start = 0;
    for (int len : spec.cycle_lengths) {
        const bool odd = len % 2 == 1;
        for (int t = 0; t + 1 < len; ++t)
            plan.in_s[edge_index(edges, n + start + t, n + start + t + 1)] = 1;
        if (!odd)  // the closing cycle edge stays out for odd lengths
            plan.in_s[edge_index(edges, n + start, n + start + len - 1)] = 1;
        for (int pos = 2; pos <= (odd ? len - 1 : len); pos += 2) {
            const int off = start + pos - 1;
            plan.in_s[edge_index(edges, inv_phi[off], n + off)] = 1;
        }
        if (odd) {
            const int off = start + len - 1;
            plan.in_s[edge_index(edges, inv_phi[off], n + off)] = 1;
        }
        start += len;
    }

    // Classify the outer vertices against this S.
    std::vector<int> d_s = selected_degrees(g, edges, plan.in_s);
    std::vector<int> klass(n, 3);
    for (int v = 0; v < n; ++v)
        if (d_s[v] == 0) klass[v] = 1;
    start = 0;
    for (int len : spec.cycle_lengths) {
        if (len % 2 == 1) klass[inv_phi[start + len - 1]] = 2;
        start += len;
    }
    for (int v = 0; v < n; ++v) {
        if (klass[v] == 1) plan.x1.push_back(v);
        if (klass[v] == 2) plan.x2.push_back(v);
        if (klass[v] == 3) plan.x3.push_back(v);
    }

    // Chosen edge: first outer-cycle edge joining class 1 to class 3; if
    // none exists, the first joining class 2 to class 3, with the spoke
    // swap that empties the class-2 endpoint's S-neighborhood.
    for (int j = 0; j < n && plan.chosen_u < 0; ++j) {
        const int a = j, b = (j + 1) % n;
        if (klass[a] == 1 && klass[b] == 3) plan.chosen_u = a, plan.chosen_v = b;
        if (klass[b] == 1 && klass[a] == 3) plan.chosen_u = b, plan.chosen_v = a;
    }
    if (plan.chosen_u < 0) {
        for (int j = 0; j < n && plan.chosen_u < 0; ++j) {
            const int a = j, b = (j + 1) % n;
            if (klass[a] == 2 && klass[b] == 3) plan.chosen_u = a, plan.chosen_v = b;
            if (klass[b] == 2 && klass[a] == 3) plan.chosen_u = b, plan.chosen_v = a;
        }
        if (plan.chosen_u < 0)
            throw std::logic_error("build_spanning_plan: no usable cycle edge");
        // Locate the odd cycle whose last vertex is matched to chosen_u and
        // trade its spoke for the cycle's first-position spoke.
        start = 0;
        int off_last = -1, off_first = -1;
        for (int len : spec.cycle_lengths) {
            if (len % 2 == 1 && spec.phi[plan.chosen_u] == start + len - 1) {
                off_last = start + len - 1;
                off_first = start;
            }
            start += len;
        }
        if (off_last < 0) throw std::logic_error("build_spanning_plan: swap source missing");
        const Edge removed{std::min(plan.chosen_u, n + off_last),
                           std::max(plan.chosen_u, n + off_last)};
        const Edge added{std::min(inv_phi[off_first], n + off_first),
                         std::max(inv_phi[off_first], n + off_first)};
        plan.in_s[edge_index(edges, removed.u, removed.v)] = 0;
        plan.in_s[edge_index(edges, added.u, added.v)] = 1;
        plan.swap = SpokeSwap{removed, added};
        d_s = selected_degrees(g, edges, plan.in_s);
        if (d_s[plan.chosen_u] != 0)
            throw std::logic_error("build_spanning_plan: swap failed to isolate endpoint");
    }

    // S together with the chosen edge must be locally irregular.
    std::vector<char> s_prime = plan.in_s;
    s_prime[edge_index(edges, plan.chosen_u, plan.chosen_v)] = 1;
    require_locally_irregular(edges, s_prime,
                              selected_degrees(g, edges, s_prime),
                              "build_spanning_plan");
    return plan;
}

EdgeColoring color_ring_permutation(const RingPermutationSpec& spec) {
    SpanningPlan plan = build_spanning_plan(spec);
    const Graph& g = plan.graph;
    const auto edges = g.edges();

    std::vector<char> s_prime = plan.in_s;
    s_prime[edge_index(edges, plan.chosen_u, plan.chosen_v)] = 1;

    // The complement of S' in the cubic graph g is always a tree (plus
    // vertices already saturated by S').  Extract it on compact labels.
    std::vector<int> t_degree = selected_degrees(g, edges, s_prime);
    for (int v = 0; v < g.n; ++v) t_degree[v] = g.degree(v) - t_degree[v];
    std::vector<int> new_of(g.n, -1), old_of;
    for (int v = 0; v < g.n; ++v)
        if (t_degree[v] > 0) {
            new_of[v] = static_cast<int>(old_of.size());
            old_of.push_back(v);
        }
    Graph tree(static_cast<int>(old_of.size()));
    for (size_t i = 0; i < edges.size(); ++i)
        if (!s_prime[i]) tree.add_edge(new_of[edges[i].u], new_of[edges[i].v]);
    if (!is_tree(tree))
        throw std::logic_error("color_ring_permutation: complement is not a tree");

    EdgeColoring sub;
    if (auto e = find_pendant_deg3_edge(tree)) {
        sub = tree_2liec_pendant_deg3(tree, e->u, e->v);
    } else if (auto p = find_pendant_odd_path(tree)) {
        sub = tree_2liec_pendant_oddpath(tree, *p);
    } else if (auto th = find_odd_thread(tree)) {
        sub = tree_2liec_odd_thread(tree, *th);
    } else if (tree.max_degree() <= 2) {
        // Bare path: must have an even number of edges; color consecutive
        // pairs alike, alternating.
        if (tree.m() % 2 != 0)
            throw std::logic_error("color_ring_permutation: odd bare path");
        sub.k = 2;
        sub.color.assign(tree.m(), 0);
        int head = -1;
        for (int v = 0; v < tree.n && head < 0; ++v)
            if (tree.degree(v) == 1) head = v;
        const auto tree_edges = tree.edges();
        int prev = -1, cur = head, step = 0;
        while (true) {
            int next = -1;
            for (int w : tree.adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            sub.color[edge_index(tree_edges, cur, next)] = 1 + ((step / 2) % 2);
            prev = cur;
            cur = next;
            ++step;
        }
    } else {
        throw std::logic_error("color_ring_permutation: no tree case applies");
    }

    EdgeColoring col;
    col.k = 3;
    col.color.assign(edges.size(), 1);
    const auto tree_edges = tree.edges();
    for (size_t i = 0; i < tree_edges.size(); ++i) {
        const Edge& e = tree_edges[i];
        col.color[edge_index(edges, old_of[e.u], old_of[e.v])] = sub.color[i] + 1;
    }
    if (!verify_liec(g, col).empty())
        throw std::logic_error("color_ring_permutation: final coloring invalid");
    return col;
}

}  // namespace liec
