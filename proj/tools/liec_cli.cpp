// Command-line surface over the library: exact chromatic-index runs,
// coloring verification, decomposability classification, constructive ring
// colorings, the crossed-spoke analysis, cubic-graph surveys, and family
// generators.  Every subcommand prints one JSON payload on stdout
// (diagnostics and --pretty renderings go to stderr); exit 0 means a
// computed answer (including a legitimate "no coloring exists"), exit 2
// invalid input, exit 3 a search cut short by --budget.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "liec/decomposability.hpp"
#include "liec/enumeration.hpp"
#include "liec/graph.hpp"
#include "liec/graph6.hpp"
#include "liec/ring.hpp"
#include "liec/solver.hpp"
#include "liec/xi.hpp"

using nlohmann::json;

namespace {

// ------------------------------------------------------------ graph sources

struct GraphSource {
    std::string graph6;
    std::string file;
    std::string builtin;
    std::vector<int> gp;     // n k
    int cycle = 0;
    int xi = 0;
    std::vector<int> theta;  // k t
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
    auto* grp = cmd->add_option_group("input", "exactly one graph source");
    grp->add_option("--graph6", src.graph6, "graph6 string");
    grp->add_option("--file", src.file,
                    "edge-list text file (\"n m\" header, then \"u v\" lines)");
    std::string names;
    for (const std::string& b : liec::builtin_names()) {
        if (!names.empty()) names += ", ";
        names += b;
    }
    grp->add_option("--builtin", src.builtin, "named graph: " + names);
    grp->add_option("--gp", src.gp, "generalized Petersen n k")->expected(2);
    grp->add_option("--cycle", src.cycle, "cycle on n vertices");
    grp->add_option("--xi", src.xi, "crossed-spoke chain of n tiles");
    grp->add_option("--theta", src.theta, "two hubs joined by k paths of length 4t+1")
        ->expected(2);
    grp->require_option(1);
}

liec::Graph load_graph(const GraphSource& src) {
    if (!src.graph6.empty()) return liec::parse_graph6(src.graph6);
    if (!src.file.empty()) {
        std::ifstream in(src.file);
        if (!in) throw std::invalid_argument("cannot open " + src.file);
        std::stringstream buf;
        buf << in.rdbuf();
        return liec::parse_edge_list_text(buf.str());
    }
    if (!src.builtin.empty()) return liec::builtin_named(src.builtin);
    if (src.gp.size() == 2) return liec::gen_generalized_petersen({src.gp[0], src.gp[1]});
    if (src.cycle) return liec::gen_cycle(src.cycle);
    if (src.xi) return liec::gen_xi(src.xi);
    if (src.theta.size() == 2) return liec::gen_theta_family(src.theta[0], src.theta[1]);
    throw std::invalid_argument("no graph source given");
}

// ----------------------------------------------------------------- payloads

int emit(const json& j, bool pretty) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
    return 0;
}

json coloring_json(const liec::Graph& g, const liec::EdgeColoring& col) {
    json edges = json::array();
    const auto es = g.edges();
    for (size_t i = 0; i < es.size(); ++i)
        edges.push_back({{"u", es[i].u}, {"v", es[i].v}, {"color", col.color[i]}});
    return json{{"k", col.k}, {"edges", edges}};
}

liec::EdgeColoring coloring_from_json(const liec::Graph& g, const json& j) {
    liec::EdgeColoring col;
    col.k = j.at("k").get<int>();
    if (col.k < 1) throw std::invalid_argument("coloring: k must be >= 1");
    const auto es = g.edges();
    col.color.assign(es.size(), 0);
    for (const json& rec : j.at("edges")) {
        const int u = rec.at("u").get<int>(), v = rec.at("v").get<int>();
        const int c = rec.at("color").get<int>();
        const liec::Edge key{std::min(u, v), std::max(u, v)};
        const auto it = std::lower_bound(es.begin(), es.end(), key);
        if (it == es.end() || !(*it == key))
            throw std::invalid_argument("coloring references non-edge " +
                                        std::to_string(u) + "-" + std::to_string(v));
        const size_t idx = static_cast<size_t>(it - es.begin());
        if (col.color[idx] != 0)
            throw std::invalid_argument("coloring lists edge " + std::to_string(u) +
                                        "-" + std::to_string(v) + " twice");
        if (c < 1 || c > col.k)
            throw std::invalid_argument("coloring: color out of range 1..k");
        col.color[idx] = c;
    }
    for (size_t i = 0; i < es.size(); ++i)
        if (col.color[i] == 0)
            throw std::invalid_argument("coloring misses edge " +
                                        std::to_string(es[i].u) + "-" +
                                        std::to_string(es[i].v));
    return col;
}

// Connected pieces as standalone graphs, for classifying possibly
// disconnected input componentwise.
std::vector<liec::Graph> components_of(const liec::Graph& g) {
    std::vector<int> comp(g.n, -1);
    int pieces = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = pieces;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[v])
                if (comp[w] == -1) comp[w] = pieces, stack.push_back(w);
        }
        ++pieces;
    }
    std::vector<int> local(g.n), count(pieces, 0);
    for (int v = 0; v < g.n; ++v) local[v] = count[comp[v]]++;
    std::vector<liec::Graph> out;
    for (int p = 0; p < pieces; ++p) out.emplace_back(count[p]);
    for (const liec::Edge& e : g.edges())
        out[comp[e.u]].add_edge(local[e.u], local[e.v]);
    return out;
}

bool all_components_decomposable(const liec::Graph& g) {
    for (const liec::Graph& piece : components_of(g))
        if (!liec::classify(piece).decomposable()) return false;
    return true;
}

// ------------------------------------------------------------- subcommands

int run_chi_irr(const GraphSource& src, int k_max, long long budget, bool pretty) {
    const liec::Graph g = load_graph(src);
    liec::SolveOptions opts;
    opts.node_budget = budget;
    const liec::ChiResult res = liec::chi_irr(g, k_max, opts);
    if (res.budget_exceeded) {
        emit({{"chi_irr", nullptr}, {"reason", "budget-exceeded"}, {"nodes", res.nodes}},
             pretty);
        return 3;
    }
    if (res.value) {
        json j{{"chi_irr", *res.value}, {"nodes", res.nodes}};
        if (res.coloring) j["coloring"] = coloring_json(g, *res.coloring);
        return emit(j, pretty);
    }
    const char* reason =
        all_components_decomposable(g) ? "exceeds-k-max" : "non-decomposable";
    return emit({{"chi_irr", nullptr}, {"reason", reason}, {"nodes", res.nodes}}, pretty);
}

int run_verify(const GraphSource& src, const std::string& coloring_path, bool pretty) {
    const liec::Graph g = load_graph(src);
    std::ifstream in(coloring_path);
    if (!in) throw std::invalid_argument("cannot open " + coloring_path);
    const liec::EdgeColoring col = coloring_from_json(g, json::parse(in));
    const auto violations = liec::verify_liec(g, col);
    json vs = json::array();
    for (const liec::Violation& v : violations)
        vs.push_back({{"u", v.edge.u},
                      {"v", v.edge.v},
                      {"color", v.color},
                      {"degree", v.degree}});
    return emit({{"valid", violations.empty()}, {"violations", vs}}, pretty);
}

int run_classify(const GraphSource& src, bool pretty) {
    const liec::Graph g = load_graph(src);
    const liec::DecomposabilityVerdict v = liec::classify(g);
    json j{{"verdict", liec::verdict_tag_name(v.tag)}, {"n", v.n}};
    if (v.tag == liec::VerdictTag::kFamilyT) {
        json peels = json::array();
        for (const liec::PeelRecord& p : v.peels) {
            const bool even = p.shape == liec::AppendageShape::kEvenPath;
            peels.push_back({{"attachment", p.attachment},
                             {"shape", even ? "even-path" : "odd-path-triangle"},
                             {"path_edges", p.path_edges},
                             {"parity", p.path_edges % 2 == 0 ? "even" : "odd"},
                             {"removed", p.removed}});
        }
        j["witness"] = json{{"base_triangle", v.base_triangle}, {"peels", peels}};
    }
    return emit(j, pretty);
}

int run_color_ring(const std::vector<int>& cycles, const std::vector<int>& phi,
                   const std::vector<int>& gp, int xi, bool pretty) {
    liec::RingPermutationSpec spec;
    if (!cycles.empty()) {
        if (phi.empty())
            throw std::invalid_argument("--cycles needs --phi");
        spec.n = static_cast<int>(phi.size());
        spec.cycle_lengths = cycles;
        spec.phi = phi;
    } else if (gp.size() == 2) {
        spec = liec::gp_as_ring_spec(gp[0], gp[1]);
    } else if (xi) {
        spec = liec::xi_as_ring_spec(xi);
    } else {
        throw std::invalid_argument("give --cycles with --phi, or --gp, or --xi");
    }
    const liec::SpanningPlan plan = liec::build_spanning_plan(spec);
    const liec::EdgeColoring col = liec::color_ring_permutation(spec);
    const auto es = plan.graph.edges();
    json s_edges = json::array();
    for (size_t i = 0; i < es.size(); ++i)
        if (plan.in_s[i]) s_edges.push_back({es[i].u, es[i].v});
    json swap = nullptr;
    if (plan.swap)
        swap = json{{"removed", {plan.swap->removed.u, plan.swap->removed.v}},
                    {"added", {plan.swap->added.u, plan.swap->added.v}}};
    const json j{{"n", spec.n},
                 {"cycle_lengths", spec.cycle_lengths},
                 {"phi", spec.phi},
                 {"plan", json{{"s_edges", s_edges},
                               {"x1", plan.x1},
                               {"x2", plan.x2},
                               {"x3", plan.x3},
                               {"chosen_edge", {plan.chosen_u, plan.chosen_v}},
                               {"swap", swap}}},
                 {"coloring", coloring_json(plan.graph, col)},
                 {"valid", liec::verify_liec(plan.graph, col).empty()}};
    return emit(j, pretty);
}

int run_xi(int n, bool digraph, bool dot, bool pretty) {
    if (dot) {
        std::cout << liec::code_digraph_dot(liec::code_digraph());
        return 0;
    }
    if (digraph)
        return emit(json::parse(liec::code_digraph_json(liec::code_digraph())), pretty);
    if (n < 2) throw std::invalid_argument("xi: need -n >= 2 (or --digraph/--dot)");
    const bool two = liec::xi_two_liec_exists(n);
    return emit({{"n", n}, {"two_liec_exists", two}, {"chi_irr", two ? 2 : 3}}, pretty);
}

int run_table1(int n, int girth_min, int jobs, bool pretty) {
    if (jobs != 1)
        std::cerr << "note: partitioned enumeration is not available in this "
                     "build; running single-threaded\n";
    const liec::EnumerationReport rep = liec::table1_row(n, girth_min);
    if (pretty)
        std::cerr << "n=" << rep.n << " girth>=" << rep.girth_min << ": "
                  << rep.non_two_liec_count << " of " << rep.total_graphs
                  << " graphs admit no 2-coloring\n";
    return emit({{"n", rep.n},
                 {"girth_min", rep.girth_min},
                 {"total_graphs", rep.total_graphs},
                 {"count", rep.non_two_liec_count},
                 {"witnesses", rep.witnesses}},
                pretty);
}

int run_scan_gp(int n_max, int jobs, bool pretty) {
    if (jobs != 1)
        std::cerr << "note: partitioned enumeration is not available in this "
                     "build; running single-threaded\n";
    json specs = json::array();
    for (const liec::GPSpec& s : liec::scan_gp(n_max))
        specs.push_back({{"n", s.n}, {"k", s.k}});
    return emit({{"n_max", n_max}, {"specs", specs}}, pretty);
}

int run_gen(const GraphSource& src, bool raw, bool pretty) {
    const liec::Graph g = load_graph(src);
    const std::string g6 = liec::emit_graph6(g);
    if (raw) {
        std::cout << g6 << "\n";
        return 0;
    }
    return emit({{"graph6", g6}, {"n", g.n}, {"m", g.m()}}, pretty);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally irregular edge coloring toolkit"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON; render human summaries to stderr");

    int rc = 0;

    GraphSource chi_src;
    int chi_k_max = 4;
    long long chi_budget = -1;
    auto* chi = app.add_subcommand("chi-irr", "exact chromatic index via the solver");
    chi->fallthrough();
    add_graph_source(chi, chi_src);
    chi->add_option("--k-max", chi_k_max, "largest color count tried (default 4)");
    chi->add_option("--budget", chi_budget, "search-node budget, -1 = unlimited");
    chi->callback([&] { rc = run_chi_irr(chi_src, chi_k_max, chi_budget, pretty); });

    GraphSource ver_src;
    std::string ver_coloring;
    auto* ver = app.add_subcommand("verify", "check a coloring file against a graph");
    ver->fallthrough();
    add_graph_source(ver, ver_src);
    ver->add_option("--coloring", ver_coloring, "coloring JSON file")->required();
    ver->callback([&] { rc = run_verify(ver_src, ver_coloring, pretty); });

    GraphSource cls_src;
    auto* cls = app.add_subcommand("classify", "decomposability classification");
    cls->fallthrough();
    add_graph_source(cls, cls_src);
    cls->callback([&] { rc = run_classify(cls_src, pretty); });

    std::vector<int> ring_cycles, ring_phi, ring_gp;
    int ring_xi = 0;
    auto* ring = app.add_subcommand("color-ring",
                                    "constructive 3-coloring of a ring permutation graph");
    ring->fallthrough();
    ring->add_option("--cycles", ring_cycles, "inner cycle lengths, comma-separated")
        ->delimiter(',');
    ring->add_option("--phi", ring_phi, "outer-to-inner matching, comma-separated")
        ->delimiter(',');
    ring->add_option("--gp", ring_gp, "generalized Petersen n k as a ring spec")
        ->expected(2);
    ring->add_option("--xi", ring_xi, "crossed-spoke chain of n tiles as a ring spec");
    ring->callback([&] { rc = run_color_ring(ring_cycles, ring_phi, ring_gp, ring_xi, pretty); });

    int xi_n = 0;
    bool xi_digraph = false, xi_dot = false;
    auto* xi = app.add_subcommand("xi", "crossed-spoke chain analysis");
    xi->fallthrough();
    xi->add_option("-n,--n", xi_n, "number of tiles (>= 2)");
    xi->add_flag("--digraph", xi_digraph, "print the code-compatibility digraph as JSON");
    xi->add_flag("--dot", xi_dot, "print the code-compatibility digraph as Graphviz text");
    xi->callback([&] { rc = run_xi(xi_n, xi_digraph, xi_dot, pretty); });

    int t1_n = 0, t1_girth = 4, t1_jobs = 1;
    auto* t1 = app.add_subcommand("table1",
                                  "count cubic graphs without a 2-coloring");
    t1->fallthrough();
    t1->add_option("--n", t1_n, "vertex count (even, 4..16)")->required();
    t1->add_option("--girth-min", t1_girth, "minimum girth (default 4)");
    t1->add_option("--jobs", t1_jobs, "worker count (this build is single-threaded)");
    t1->callback([&] { rc = run_table1(t1_n, t1_girth, t1_jobs, pretty); });

    int gp_n_max = 0, gp_jobs = 1;
    auto* gp = app.add_subcommand("scan-gp",
                                  "generalized Petersen graphs of girth >= 5 "
                                  "without a 2-coloring");
    gp->fallthrough();
    gp->add_option("--n-max", gp_n_max, "largest outer-cycle length")->required();
    gp->add_option("--jobs", gp_jobs, "worker count (this build is single-threaded)");
    gp->callback([&] { rc = run_scan_gp(gp_n_max, gp_jobs, pretty); });

    GraphSource gen_src;
    bool gen_raw = false;
    auto* gen = app.add_subcommand("gen", "emit a graph as graph6");
    gen->fallthrough();
    add_graph_source(gen, gen_src);
    gen->add_flag("--raw", gen_raw, "bare graph6 line instead of JSON");
    gen->callback([&] { rc = run_gen(gen_src, gen_raw, pretty); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_rc = app.exit(e);
        return cli_rc == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const liec::Graph6ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
