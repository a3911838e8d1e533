#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gramsey/bounds.hpp"
#include "gramsey/construct.hpp"
#include "gramsey/io.hpp"
#include "gramsey/matcher.hpp"
#include "gramsey/repeatgraph.hpp"
#include "gramsey/search.hpp"
#include "gramsey/verify.hpp"

namespace py = pybind11;
using namespace gramsey;

namespace {

std::pair<long long, long long> rational_pair(const Rational& r) {
    return {r.numerator(), r.denominator()};
}

EdgeColoring coloring_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_coloring(in);
}

MultiHypergraph hypergraph_from_text(const std::string& text) {
    std::istringstream in(text);
    return read_hypergraph(in);
}

}  // namespace

PYBIND11_MODULE(_gramsey, m) {
    m.doc() = "generalized Ramsey colorings, extremal hypergraphs and exact oracles";

    py::register_exception<PartialColoringError>(m, "PartialColoringError");
    py::register_exception<ParseError>(m, "FileParseError");
    py::register_exception<StructuralPreconditionError>(m, "StructuralPreconditionError");

    py::class_<VertexPair>(m, "VertexPair")
        .def(py::init<Vertex, Vertex>())
        .def_readonly("u", &VertexPair::u)
        .def_readonly("v", &VertexPair::v)
        .def("__repr__", [](const VertexPair& p) {
            return "VertexPair(" + std::to_string(p.u) + ", " + std::to_string(p.v) + ")";
        });

    py::class_<ViolationWitness>(m, "ViolationWitness")
        .def_readonly("kind", &ViolationWitness::kind)
        .def_readonly("subset", &ViolationWitness::subset)
        .def_readonly("colors_seen", &ViolationWitness::colors_seen)
        .def_readonly("repeats", &ViolationWitness::repeats)
        .def_readonly("induced_edges", &ViolationWitness::induced_edges)
        .def("__repr__", [](const ViolationWitness& w) {
            std::string s = "ViolationWitness(" + w.kind + ", {";
            for (std::size_t i = 0; i < w.subset.size(); ++i)
                s += (i ? "," : "") + std::to_string(w.subset[i]);
            return s + "})";
        });

    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def(py::init<int>(), py::arg("n"))
        .def_static("rainbow", &EdgeColoring::rainbow)
        .def_property_readonly("n", &EdgeColoring::n)
        .def("color", &EdgeColoring::color)
        .def("set_color", &EdgeColoring::set_color)
        .def("is_total", &EdgeColoring::is_total)
        .def("palette_size", &EdgeColoring::palette_size)
        .def("used_colors", &EdgeColoring::used_colors)
        .def("to_text", [](const EdgeColoring& c) { return coloring_to_string(c); })
        .def("__eq__", [](const EdgeColoring& a, const EdgeColoring& b) { return a == b; });

    py::enum_<Uniformity>(m, "Uniformity")
        .value("Mixed", Uniformity::Mixed)
        .value("Three", Uniformity::Three)
        .value("Four", Uniformity::Four);

    py::class_<HyperEdge>(m, "HyperEdge")
        .def_readonly("vertices", &HyperEdge::vertices)
        .def_readonly("multiplicity", &HyperEdge::multiplicity);

    py::class_<MultiHypergraph>(m, "MultiHypergraph")
        .def(py::init<int, Uniformity>(), py::arg("n"), py::arg("r") = Uniformity::Four)
        .def_property_readonly("n", &MultiHypergraph::n)
        .def("add_edge", &MultiHypergraph::add_edge, py::arg("vertices"),
             py::arg("multiplicity") = 1)
        .def("edges", &MultiHypergraph::edges)
        .def("total_edge_count", &MultiHypergraph::total_edge_count)
        .def("distinct_edge_count", &MultiHypergraph::distinct_edge_count)
        .def("degrees", &MultiHypergraph::degrees)
        .def("to_text", [](const MultiHypergraph& h) { return hypergraph_to_string(h); })
        .def("__eq__",
             [](const MultiHypergraph& a, const MultiHypergraph& b) { return a == b; });

    // core operations
    m.def("count_colors", &count_colors);
    m.def("count_repeats", &count_repeats);
    m.def("normalize_colors", &normalize_colors);
    m.def("parse_coloring", &coloring_from_text);
    m.def("parse_hypergraph", &hypergraph_from_text);
    m.def("read_coloring_file", &read_coloring_file);
    m.def("read_hypergraph_file", &read_hypergraph_file);
    m.def("write_coloring_file", &write_coloring_file);
    m.def("write_hypergraph_file", &write_hypergraph_file);

    // verification
    m.def("check_pq_coloring", &check_pq_coloring, py::arg("coloring"), py::arg("p"),
          py::arg("q"));
    m.def(
        "check_sk_free",
        [](const MultiHypergraph& h, int s, long long k) { return check_sk_free(h, s, k); },
        py::arg("hypergraph"), py::arg("s"), py::arg("k"));
    m.def("check_defH_properties", &check_defH_properties, py::arg("hypergraph"),
          py::arg("ell"));
    m.def("enumerate_violations", &enumerate_violations, py::arg("coloring"), py::arg("p"),
          py::arg("q"), py::arg("limit"));

    // repeat hypergraphs
    py::enum_<PaddingRule>(m, "PaddingRule")
        .value("Strict", PaddingRule::Strict)
        .value("Padded", PaddingRule::Padded);
    m.def(
        "build_repeat_quadratic",
        [](const EdgeColoring& c, PaddingRule padding) {
            RepeatBuildPolicy policy;
            policy.padding = padding;
            return build_repeat_quadratic(c, policy);
        },
        py::arg("coloring"), py::arg("padding") = PaddingRule::Strict);
    m.def("build_repeat_linear", &build_repeat_linear);
    m.def("check_faithfulness", &check_faithfulness, py::arg("coloring"), py::arg("hypergraph"),
          py::arg("mode"));

    // constructions
    py::class_<BlockDesign>(m, "BlockDesign")
        .def_readonly("n", &BlockDesign::n)
        .def_readonly("blocks", &BlockDesign::blocks)
        .def_readonly("perfect", &BlockDesign::perfect);
    py::enum_<DesignMode>(m, "DesignMode")
        .value("Exact", DesignMode::Exact)
        .value("Greedy", DesignMode::Greedy);
    m.def("make_design", &make_design, py::arg("n"), py::arg("mode") = DesignMode::Exact);
    m.def("design_to_hypergraph", &design_to_hypergraph);
    m.def("coloring_from_design", &coloring_from_design);
    m.def("coloring_614", &coloring_614);
    m.def("quad_coloring_from_hypergraph", &quad_coloring_from_hypergraph,
          py::arg("hypergraph"), py::arg("ell"));

    // search
    py::enum_<SearchStatus>(m, "SearchStatus")
        .value("Exact", SearchStatus::Exact)
        .value("Inconclusive", SearchStatus::Inconclusive);
    py::class_<SearchStats>(m, "SearchStats")
        .def_readonly("nodes_explored", &SearchStats::nodes_explored)
        .def_readonly("elapsed_seconds", &SearchStats::elapsed_seconds);
    py::class_<ColoringSearchResult>(m, "ColoringSearchResult")
        .def_readonly("status", &ColoringSearchResult::status)
        .def_readonly("value", &ColoringSearchResult::value)
        .def_readonly("witness", &ColoringSearchResult::witness)
        .def_readonly("stats", &ColoringSearchResult::stats)
        .def_readonly("note", &ColoringSearchResult::note);
    py::class_<HypergraphSearchResult>(m, "HypergraphSearchResult")
        .def_readonly("status", &HypergraphSearchResult::status)
        .def_readonly("value", &HypergraphSearchResult::value)
        .def_readonly("witness", &HypergraphSearchResult::witness)
        .def_readonly("stats", &HypergraphSearchResult::stats)
        .def_readonly("note", &HypergraphSearchResult::note);
    m.def("exact_f", &exact_f, py::arg("n"), py::arg("p"), py::arg("q"),
          py::arg("node_budget") = kDefaultColoringBudget);
    m.def("exact_F", &exact_F, py::arg("n"), py::arg("s"), py::arg("k"), py::arg("r"),
          py::arg("node_budget") = kDefaultHypergraphBudget);
    m.def("exact_G", &exact_G, py::arg("n"), py::arg("s"), py::arg("k"), py::arg("r"),
          py::arg("node_budget") = kDefaultHypergraphBudget);
    m.def("exact_H4", &exact_H4, py::arg("n"), py::arg("ell"),
          py::arg("node_budget") = kDefaultHypergraphBudget);
    m.def("chromatic_index_oracle", &chromatic_index_oracle);

    // matcher
    py::class_<ColorGraphSpec>(m, "ColorGraphSpec")
        .def(py::init([](int n, long long palette_size, double epsilon) {
                 return ColorGraphSpec{n, palette_size, epsilon};
             }),
             py::arg("n"), py::arg("palette_size"), py::arg("epsilon") = 0.5)
        .def_readonly("n", &ColorGraphSpec::n)
        .def_readonly("palette_size", &ColorGraphSpec::palette_size)
        .def_readonly("epsilon", &ColorGraphSpec::epsilon);
    py::class_<ConfigCheckReport>(m, "ConfigCheckReport")
        .def_readonly("a_degree", &ConfigCheckReport::a_degree)
        .def_readonly("b_degree_max", &ConfigCheckReport::b_degree_max)
        .def_readonly("max_pair_codegree", &ConfigCheckReport::max_pair_codegree);
    py::class_<MatcherFailure>(m, "MatcherFailure")
        .def_readonly("stuck_pair", &MatcherFailure::stuck_pair)
        .def_readonly("restarts_used", &MatcherFailure::restarts_used);
    py::class_<MatcherResult>(m, "MatcherResult")
        .def_readonly("coloring", &MatcherResult::coloring)
        .def_readonly("failure", &MatcherResult::failure)
        .def_readonly("restarts_used", &MatcherResult::restarts_used)
        .def_readonly("seed", &MatcherResult::seed)
        .def("ok", &MatcherResult::ok);
    m.def("verify_G_conditions", &verify_G_conditions);
    m.def("target_palette_size", &target_palette_size);
    m.def("find_avoiding_coloring", &find_avoiding_coloring, py::arg("n"), py::arg("p"),
          py::arg("palette_size"), py::arg("seed"), py::arg("max_restarts"));
    m.def("audit_configuration", &audit_configuration, py::arg("coloring"), py::arg("p"));
    m.def("incremental_config_ok", &incremental_config_ok);

    // bounds: rationals exposed as (numerator, denominator) tuples
    py::class_<ThresholdTable>(m, "ThresholdTable")
        .def_readonly("p", &ThresholdTable::p)
        .def_readonly("q_lin", &ThresholdTable::q_lin)
        .def_readonly("q_quad", &ThresholdTable::q_quad)
        .def_property_readonly(
            "lin_lower_coeff",
            [](const ThresholdTable& t) { return rational_pair(t.lin_lower_coeff); })
        .def_property_readonly(
            "quad_lower_coeff",
            [](const ThresholdTable& t) { return rational_pair(t.quad_lower_coeff); })
        .def_property_readonly(
            "quad_upper_coeff",
            [](const ThresholdTable& t) { return rational_pair(t.quad_upper_coeff); })
        .def_property_readonly(
            "lin_upper_coeff",
            [](const ThresholdTable& t) { return rational_pair(t.lin_upper_coeff); })
        .def_property_readonly(
            "h4_upper_coeff",
            [](const ThresholdTable& t) -> std::optional<std::pair<long long, long long>> {
                if (!t.h4_upper_coeff) return std::nullopt;
                return rational_pair(*t.h4_upper_coeff);
            });
    m.def("thresholds", &thresholds);
    m.def("h4_upper_coeff", [](int ell) { return rational_pair(h4_upper_coeff(ell)); });
    m.def("quad_limit_from_F", [](long long num, long long den) {
        return rational_pair(quad_limit_from_F(Rational(num, den)));
    });
    py::class_<KnownConstant>(m, "KnownConstant")
        .def_readonly("quantity", &KnownConstant::quantity)
        .def_property_readonly(
            "value", [](const KnownConstant& k) { return rational_pair(k.value); })
        .def_readonly("unit", &KnownConstant::unit)
        .def_readonly("provenance", &KnownConstant::provenance);
    m.def("known_constants", &known_constants);
    py::class_<H4CertifyReport>(m, "H4CertifyReport")
        .def_readonly("components_by_order", &H4CertifyReport::components_by_order)
        .def_readonly("edge_total", &H4CertifyReport::edge_total)
        .def_readonly("pair_budget_used", &H4CertifyReport::pair_budget_used)
        .def_readonly("pair_budget", &H4CertifyReport::pair_budget)
        .def_readonly("violation", &H4CertifyReport::violation)
        .def("ok", &H4CertifyReport::ok);
    m.def("certify_h4_pair_count", &certify_h4_pair_count, py::arg("hypergraph"),
          py::arg("ell"));
}
