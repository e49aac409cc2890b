// Python bindings for the locally irregular edge coloring toolkit.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liec/canonical.hpp"
#include "liec/decomposability.hpp"
#include "liec/enumeration.hpp"
#include "liec/graph.hpp"
#include "liec/graph6.hpp"
#include "liec/ring.hpp"
#include "liec/solver.hpp"
#include "liec/trees.hpp"
#include "liec/xi.hpp"

namespace py = pybind11;
using namespace liec;

PYBIND11_MODULE(liec, m) {
    m.doc() = "locally irregular edge coloring: exact solver, constructive "
              "colorings, decomposability classification, and small-graph "
              "surveys";

    // ------------------------------------------------------------- graphs
    py::class_<Edge>(m, "Edge")
        .def_readonly("u", &Edge::u)
        .def_readonly("v", &Edge::v)
        .def("__eq__", [](const Edge& a, const Edge& b) { return a == b; })
        .def("__repr__", [](const Edge& e) {
            return "Edge(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
        });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_readonly("n", &Graph::n)
        .def_readonly("adj", &Graph::adj)
        .def("add_edge", &Graph::add_edge)
        .def("degree", &Graph::degree)
        .def("m", &Graph::m)
        .def("max_degree", &Graph::max_degree)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("make_graph", &make_graph, py::arg("n"), py::arg("edges"));
    m.def("gen_cycle", &gen_cycle);
    m.def("gen_path", &gen_path);
    m.def("gen_generalized_petersen",
          [](int n, int k) { return gen_generalized_petersen({n, k}); },
          py::arg("n"), py::arg("k"));
    m.def("gen_ring_permutation", &gen_ring_permutation);
    m.def("gen_xi", &gen_xi);
    m.def("gen_theta_family", &gen_theta_family, py::arg("k"), py::arg("t"));
    m.def("gen_double_diamond_cubic", &gen_double_diamond_cubic);
    m.def("builtin_named", &builtin_named);
    m.def("builtin_names", &builtin_names);

    m.attr("GIRTH_INFINITY") = kGirthInfinity;
    m.def("girth", &girth);
    m.def("is_locally_irregular", &is_locally_irregular);
    m.def("is_claw_free", &is_claw_free);
    m.def("is_connected", &is_connected);
    m.def("is_tree", &is_tree);
    m.def("is_bipartite", &is_bipartite);

    py::class_<DiamondPair>(m, "DiamondPair")
        .def_readonly("d1", &DiamondPair::d1)
        .def_readonly("d2", &DiamondPair::d2)
        .def_readonly("bridge", &DiamondPair::bridge);
    m.def("find_diamond_pair", &find_diamond_pair);

    m.def("parse_graph6", &parse_graph6);
    m.def("emit_graph6", &emit_graph6);
    m.def("parse_edge_list_text", &parse_edge_list_text);
    m.def("emit_edge_list_text", &emit_edge_list_text);
    m.def("canonical_graph6", &canonical_graph6);
    m.def("are_isomorphic", &are_isomorphic);

    // ------------------------------------------------------------- solver
    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init<>())
        .def(py::init([](int k, std::vector<int> color) {
                 return EdgeColoring{k, std::move(color)};
             }),
             py::arg("k"), py::arg("color"))
        .def_readwrite("k", &EdgeColoring::k)
        .def_readwrite("color", &EdgeColoring::color);

    py::class_<Violation>(m, "Violation")
        .def_readonly("edge", &Violation::edge)
        .def_readonly("color", &Violation::color)
        .def_readonly("degree", &Violation::degree);

    m.def("verify_liec", &verify_liec);

    py::enum_<SolveStatus>(m, "SolveStatus")
        .value("Found", SolveStatus::kFound)
        .value("NoneExists", SolveStatus::kNone)
        .value("Budget", SolveStatus::kBudget);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("status", &SolveResult::status)
        .def_readonly("coloring", &SolveResult::coloring)
        .def_readonly("nodes", &SolveResult::nodes);

    m.def("exists_k_liec",
          [](const Graph& g, int k, long long node_budget) {
              return exists_k_liec(g, k, SolveOptions{node_budget});
          },
          py::arg("g"), py::arg("k"), py::arg("node_budget") = -1);

    py::class_<ChiResult>(m, "ChiResult")
        .def_readonly("value", &ChiResult::value)
        .def_readonly("coloring", &ChiResult::coloring)
        .def_readonly("budget_exceeded", &ChiResult::budget_exceeded)
        .def_readonly("nodes", &ChiResult::nodes);

    m.def("chi_irr",
          [](const Graph& g, int k_max, long long node_budget) {
              return chi_irr(g, k_max, SolveOptions{node_budget});
          },
          py::arg("g"), py::arg("k_max") = 4, py::arg("node_budget") = -1);

    m.def("is_decomposable_oracle", &is_decomposable_oracle);

    // --------------------------------------------------- decomposability
    py::enum_<VerdictTag>(m, "VerdictTag")
        .value("Decomposable", VerdictTag::kDecomposable)
        .value("OddPath", VerdictTag::kOddPath)
        .value("OddCycle", VerdictTag::kOddCycle)
        .value("FamilyT", VerdictTag::kFamilyT);
    m.def("verdict_tag_name", &verdict_tag_name);

    py::enum_<AppendageShape>(m, "AppendageShape")
        .value("EvenPath", AppendageShape::kEvenPath)
        .value("OddPathTriangle", AppendageShape::kOddPathTriangle);

    py::class_<PeelRecord>(m, "PeelRecord")
        .def_readonly("attachment", &PeelRecord::attachment)
        .def_readonly("shape", &PeelRecord::shape)
        .def_readonly("path_edges", &PeelRecord::path_edges)
        .def_readonly("removed", &PeelRecord::removed);

    py::class_<DecomposabilityVerdict>(m, "DecomposabilityVerdict")
        .def_readonly("tag", &DecomposabilityVerdict::tag)
        .def_readonly("n", &DecomposabilityVerdict::n)
        .def_readonly("peels", &DecomposabilityVerdict::peels)
        .def_readonly("base_triangle", &DecomposabilityVerdict::base_triangle)
        .def("decomposable", &DecomposabilityVerdict::decomposable);

    m.def("classify", &classify);
    m.def("replay_family_t_witness", &replay_family_t_witness);

    py::class_<ClassificationSurvey>(m, "ClassificationSurvey")
        .def_readonly("n_max", &ClassificationSurvey::n_max)
        .def_readonly("total", &ClassificationSurvey::total)
        .def_readonly("decomposable", &ClassificationSurvey::decomposable)
        .def_readonly("odd_paths", &ClassificationSurvey::odd_paths)
        .def_readonly("odd_cycles", &ClassificationSurvey::odd_cycles)
        .def_readonly("family_t", &ClassificationSurvey::family_t)
        .def_readonly("family_t_graph6", &ClassificationSurvey::family_t_graph6);
    m.def("classify_all_small", &classify_all_small);

    // -------------------------------------------------------------- trees
    py::class_<Shrub>(m, "Shrub")
        .def(py::init([](Graph tree, int root) {
                 return Shrub{std::move(tree), root};
             }),
             py::arg("tree"), py::arg("root"))
        .def_readonly("tree", &Shrub::tree)
        .def_readonly("root", &Shrub::root);

    py::class_<AliecResult>(m, "AliecResult")
        .def_readonly("coloring", &AliecResult::coloring)
        .def_readonly("almost", &AliecResult::almost);

    m.def("shrub_2aliec", &shrub_2aliec);
    m.def("tree_2liec_pendant_deg3", &tree_2liec_pendant_deg3);
    m.def("tree_2liec_pendant_oddpath", &tree_2liec_pendant_oddpath);
    m.def("tree_2liec_odd_thread", &tree_2liec_odd_thread);
    m.def("find_pendant_deg3_edge", &find_pendant_deg3_edge);
    m.def("find_pendant_odd_path", &find_pendant_odd_path);
    m.def("find_odd_thread", &find_odd_thread);

    // --------------------------------------------------------------- ring
    py::class_<GPSpec>(m, "GPSpec")
        .def(py::init([](int n, int k) { return GPSpec{n, k}; }),
             py::arg("n"), py::arg("k"))
        .def_readwrite("n", &GPSpec::n)
        .def_readwrite("k", &GPSpec::k)
        .def("__repr__", [](const GPSpec& s) {
            return "GPSpec(n=" + std::to_string(s.n) + ", k=" + std::to_string(s.k) + ")";
        });

    py::class_<RingPermutationSpec>(m, "RingPermutationSpec")
        .def(py::init([](int n, std::vector<int> cycle_lengths, std::vector<int> phi) {
                 return RingPermutationSpec{n, std::move(cycle_lengths), std::move(phi)};
             }),
             py::arg("n"), py::arg("cycle_lengths"), py::arg("phi"))
        .def_readwrite("n", &RingPermutationSpec::n)
        .def_readwrite("cycle_lengths", &RingPermutationSpec::cycle_lengths)
        .def_readwrite("phi", &RingPermutationSpec::phi);

    m.def("validate_spec", &validate_spec);
    m.def("gp_as_ring_spec", &gp_as_ring_spec, py::arg("n"), py::arg("k"));
    m.def("xi_as_ring_spec", &xi_as_ring_spec);

    py::class_<SpokeSwap>(m, "SpokeSwap")
        .def_readonly("removed", &SpokeSwap::removed)
        .def_readonly("added", &SpokeSwap::added);

    py::class_<SpanningPlan>(m, "SpanningPlan")
        .def_readonly("graph", &SpanningPlan::graph)
        .def_readonly("in_s", &SpanningPlan::in_s)
        .def_readonly("x1", &SpanningPlan::x1)
        .def_readonly("x2", &SpanningPlan::x2)
        .def_readonly("x3", &SpanningPlan::x3)
        .def_readonly("chosen_u", &SpanningPlan::chosen_u)
        .def_readonly("chosen_v", &SpanningPlan::chosen_v)
        .def_readonly("swap", &SpanningPlan::swap);

    m.def("build_spanning_plan", &build_spanning_plan);
    m.def("color_ring_permutation", &color_ring_permutation);

    // ----------------------------------------------------------------- xi
    py::class_<XiHalf>(m, "XiHalf")
        .def(py::init([](char color, int mult) { return XiHalf{color, mult}; }),
             py::arg("color"), py::arg("mult"))
        .def_readonly("color", &XiHalf::color)
        .def_readonly("mult", &XiHalf::mult)
        .def("__eq__", [](const XiHalf& a, const XiHalf& b) { return a == b; });

    py::class_<XiCode>(m, "XiCode")
        .def_readonly("part", &XiCode::part)
        .def("__eq__", [](const XiCode& a, const XiCode& b) { return a == b; })
        .def("__lt__", [](const XiCode& a, const XiCode& b) { return a < b; })
        .def("__str__", &xi_code_to_string)
        .def("__repr__", [](const XiCode& c) {
            return "XiCode(\"" + xi_code_to_string(c) + "\")";
        });

    m.def("xi_half_rank", &xi_half_rank);
    m.def("xi_code_to_string", &xi_code_to_string);
    m.def("xi_code_from_string", &xi_code_from_string);
    m.def("enumerate_xi_codes", &enumerate_xi_codes);

    py::class_<CodeDigraph>(m, "CodeDigraph")
        .def_readonly("codes", &CodeDigraph::codes)
        .def_readonly("arcs", &CodeDigraph::arcs)
        .def_readonly("scc", &CodeDigraph::scc);

    m.def("code_digraph", &code_digraph, py::return_value_policy::reference);
    m.def("xi_two_liec_exists", &xi_two_liec_exists);
    m.def("code_digraph_dot", &code_digraph_dot);
    m.def("code_digraph_json", &code_digraph_json);

    // -------------------------------------------------------- enumeration
    m.def("enumerate_cubic", &enumerate_cubic, py::arg("n"), py::arg("girth_min"),
          py::arg("visit"));

    py::class_<SubcubicFilter>(m, "SubcubicFilter")
        .def(py::init([](int girth_min, bool claw_free_only) {
                 return SubcubicFilter{girth_min, claw_free_only};
             }),
             py::arg("girth_min") = 3, py::arg("claw_free_only") = false)
        .def_readwrite("girth_min", &SubcubicFilter::girth_min)
        .def_readwrite("claw_free_only", &SubcubicFilter::claw_free_only);

    m.def("enumerate_subcubic_connected", &enumerate_subcubic_connected,
          py::arg("n_max"), py::arg("visit"), py::arg("filter") = SubcubicFilter{});

    py::class_<EnumerationReport>(m, "EnumerationReport")
        .def_readonly("n", &EnumerationReport::n)
        .def_readonly("girth_min", &EnumerationReport::girth_min)
        .def_readonly("total_graphs", &EnumerationReport::total_graphs)
        .def_readonly("non_two_liec_count", &EnumerationReport::non_two_liec_count)
        .def_readonly("witnesses", &EnumerationReport::witnesses);

    m.def("table1_row", &table1_row, py::arg("n"), py::arg("girth_min"));
    m.def("scan_gp", &scan_gp);
}
