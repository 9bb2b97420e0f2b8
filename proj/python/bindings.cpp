// Python bindings for the knowpath core. The module mirrors the C++ surface
// one to one; knowpath/__init__.py re-exports it under friendlier names.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "knowpath/analysis.hpp"
#include "knowpath/backbone.hpp"
#include "knowpath/citation_matrix.hpp"
#include "knowpath/errors.hpp"
#include "knowpath/export.hpp"
#include "knowpath/field_table.hpp"
#include "knowpath/flow_network.hpp"
#include "knowpath/indicators.hpp"
#include "knowpath/shortest_paths.hpp"

namespace py = pybind11;
using namespace knowpath;

namespace {

IngestOptions ingest_options(bool drop_self) {
    IngestOptions options;
    options.drop_self = drop_self;
    return options;
}

ExportOptions export_options(bool full_precision) {
    ExportOptions options;
    options.full_precision = full_precision;
    return options;
}

template <typename Fn>
std::string to_string_via(Fn&& write) {
    std::ostringstream out;
    write(out);
    return out.str();
}

} // namespace

PYBIND11_MODULE(_knowpath, m) {
    m.doc() = "Directed knowledge-flow analysis over inter-field citation counts";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<Division>(m, "Division")
        .value("science", Division::science)
        .value("social_science", Division::social_science);
    m.def("division_token", [](Division d) { return std::string(division_token(d)); },
          py::arg("division"));
    m.def(
        "parse_division", [](const std::string& token) { return parse_division(token); },
        py::arg("token"));

    py::enum_<TaxonomyLevel>(m, "TaxonomyLevel")
        .value("category", TaxonomyLevel::category)
        .value("class_", TaxonomyLevel::class_)
        .value("division", TaxonomyLevel::division);
    py::enum_<PathMetric>(m, "PathMetric")
        .value("spl", PathMetric::spl)
        .value("spw", PathMetric::spw);
    py::enum_<Metric>(m, "Metric")
        .value("aspl", Metric::aspl)
        .value("aspw", Metric::aspw)
        .value("oisp", Metric::oisp);
    py::enum_<Direction>(m, "Direction")
        .value("source", Direction::source)
        .value("destination", Direction::destination);
    py::enum_<PathType>(m, "PathType")
        .value("s_to_s", PathType::s_to_s)
        .value("s_via_ss_to_s", PathType::s_via_ss_to_s)
        .value("s_to_ss", PathType::s_to_ss)
        .value("s_detour_to_ss", PathType::s_detour_to_ss)
        .value("ss_to_s", PathType::ss_to_s)
        .value("ss_detour_to_s", PathType::ss_detour_to_s)
        .value("ss_to_ss", PathType::ss_to_ss)
        .value("ss_via_s_to_ss", PathType::ss_via_s_to_ss);
    m.attr("PATH_TYPES") = py::cast(std::vector<PathType>(kPathTypes.begin(), kPathTypes.end()));
    m.def("path_type_label", [](PathType t) { return std::string(path_type_label(t)); },
          py::arg("type"));
    m.def("level_token", [](TaxonomyLevel level) { return std::string(level_token(level)); },
          py::arg("level"));
    m.def("metric_token", [](PathMetric metric) { return std::string(metric_token(metric)); },
          py::arg("metric"));

    py::class_<FieldTable>(m, "FieldTable")
        .def(py::init<>())
        .def("add", &FieldTable::add, py::arg("category"), py::arg("cls"), py::arg("division"))
        .def("__len__", &FieldTable::size)
        .def("size", &FieldTable::size)
        .def("find", &FieldTable::find, py::arg("category"))
        .def("category", &FieldTable::category, py::arg("field"))
        .def("field_class", &FieldTable::field_class, py::arg("field"))
        .def("class_index", &FieldTable::class_index, py::arg("field"))
        .def("division", &FieldTable::division, py::arg("field"))
        .def("class_labels", &FieldTable::class_labels)
        .def("class_division", &FieldTable::class_division, py::arg("cls"))
        .def("count_in_division", &FieldTable::count_in_division, py::arg("division"));
    m.def("load_taxonomy", &load_taxonomy, py::arg("path"));

    py::class_<CitationMatrix>(m, "CitationMatrix")
        .def(py::init<int>(), py::arg("n"))
        .def("__len__", &CitationMatrix::size)
        .def("size", &CitationMatrix::size)
        .def("at", &CitationMatrix::at, py::arg("citing"), py::arg("cited"))
        .def("add", &CitationMatrix::add, py::arg("citing"), py::arg("cited"), py::arg("count"))
        .def("total", &CitationMatrix::total)
        .def("empty", &CitationMatrix::empty)
        .def("scale", &CitationMatrix::scale, py::arg("factor"));
    m.def(
        "load_category_citations",
        [](const std::filesystem::path& path, const FieldTable& fields, bool drop_self) {
            return load_category_citations(path, fields, ingest_options(drop_self));
        },
        py::arg("path"), py::arg("fields"), py::arg("drop_self") = false);
    m.def(
        "collapse_journal_citations",
        [](const std::filesystem::path& journal_citations, const std::filesystem::path& assignments,
           const FieldTable& fields, bool drop_self) {
            return collapse_journal_citations(journal_citations, assignments, fields,
                                              ingest_options(drop_self));
        },
        py::arg("journal_citations"), py::arg("assignments"), py::arg("fields"),
        py::arg("drop_self") = false);

    py::class_<FlowNetwork>(m, "FlowNetwork")
        .def_static("from_citations", &FlowNetwork::from_citations, py::arg("matrix"))
        .def("__len__", &FlowNetwork::size)
        .def("size", &FlowNetwork::size)
        .def("width", &FlowNetwork::width, py::arg("source"), py::arg("target"))
        .def("out_width", &FlowNetwork::out_width, py::arg("source"));
    py::class_<ReachabilityReport>(m, "ReachabilityReport")
        .def_readonly("strongly_connected", &ReachabilityReport::strongly_connected)
        .def_readonly("missing_pairs", &ReachabilityReport::missing_pairs)
        .def_readonly("missing_total", &ReachabilityReport::missing_total);
    m.def("strongly_connected", &strongly_connected, py::arg("net"), py::arg("pair_cap") = 100);

    py::class_<PathTable>(m, "PathTable")
        .def("__len__", &PathTable::size)
        .def("size", &PathTable::size)
        .def("pred", &PathTable::pred, py::arg("i"), py::arg("j"))
        .def("spl", &PathTable::spl, py::arg("i"), py::arg("j"))
        .def("spw", &PathTable::spw, py::arg("i"), py::arg("j"))
        .def("reachable", &PathTable::reachable, py::arg("i"), py::arg("j"))
        .def("finite_pairs", &PathTable::finite_pairs);
    py::class_<PathRow>(m, "PathRow")
        .def_readonly("pred", &PathRow::pred)
        .def_readonly("spl", &PathRow::spl)
        .def_readonly("spw", &PathRow::spw);
    m.attr("NO_PRED") = kNoPred;
    m.attr("TIE_EPS") = kTieEps;
    m.def("dijkstra_from", &dijkstra_from, py::arg("net"), py::arg("source"));
    m.def("all_pairs", &all_pairs, py::arg("net"), py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("reconstruct_path", &reconstruct_path, py::arg("table"), py::arg("i"), py::arg("j"));

    py::class_<IndicatorStats>(m, "IndicatorStats")
        .def_readonly("mean", &IndicatorStats::mean)
        .def_readonly("sd", &IndicatorStats::sd)
        .def_readonly("max", &IndicatorStats::max)
        .def_readonly("excluded", &IndicatorStats::excluded);
    py::class_<IndicatorReport>(m, "IndicatorReport")
        .def_readonly("aspl_source", &IndicatorReport::aspl_source)
        .def_readonly("aspl_destination", &IndicatorReport::aspl_destination)
        .def_readonly("aspw_source", &IndicatorReport::aspw_source)
        .def_readonly("aspw_destination", &IndicatorReport::aspw_destination)
        .def_readonly("oisp", &IndicatorReport::oisp);
    m.def("compute_aspl", &compute_aspl, py::arg("table"), py::arg("direction"));
    m.def("compute_aspw", &compute_aspw, py::arg("table"), py::arg("direction"));
    m.def("compute_oisp", &compute_oisp, py::arg("table"));
    m.def("compute_indicators", &compute_indicators, py::arg("table"),
          py::call_guard<py::gil_scoped_release>());

    py::class_<RankEntry>(m, "RankEntry")
        .def_readonly("field", &RankEntry::field)
        .def_readonly("value", &RankEntry::value)
        .def("__repr__", [](const RankEntry& e) {
            return "RankEntry(field=" + std::to_string(e.field) +
                   ", value=" + std::to_string(e.value) + ")";
        });
    m.def("rank_fields", &rank_fields, py::arg("report"), py::arg("fields"), py::arg("metric"),
          py::arg("direction"), py::arg("division") = std::nullopt, py::arg("k"));

    py::class_<HeatMap>(m, "HeatMap")
        .def_readonly("level", &HeatMap::level)
        .def_readonly("metric", &HeatMap::metric)
        .def_readonly("labels", &HeatMap::labels)
        .def_readonly("cells", &HeatMap::cells)
        .def_readonly("counts", &HeatMap::counts)
        .def("__len__", &HeatMap::size)
        .def("size", &HeatMap::size)
        .def("cell", &HeatMap::cell, py::arg("r"), py::arg("c"))
        .def("count", &HeatMap::count, py::arg("r"), py::arg("c"));
    m.def("aggregate_heatmap", &aggregate_heatmap, py::arg("table"), py::arg("fields"),
          py::arg("level"), py::arg("metric"));
    m.def("reaggregate_heatmap", &reaggregate_heatmap, py::arg("map"), py::arg("group_of"),
          py::arg("labels"), py::arg("level"));

    py::class_<PathTypeCensus>(m, "PathTypeCensus")
        .def_readonly("counts", &PathTypeCensus::counts)
        .def_readonly("unreachable", &PathTypeCensus::unreachable)
        .def("count", &PathTypeCensus::count, py::arg("type"))
        .def("classified_total", &PathTypeCensus::classified_total)
        .def("block_total", &PathTypeCensus::block_total, py::arg("type"))
        .def("percent_of_all", &PathTypeCensus::percent_of_all, py::arg("type"))
        .def("percent_of_block", &PathTypeCensus::percent_of_block, py::arg("type"));
    m.def("classify_paths", &classify_paths, py::arg("table"), py::arg("fields"));

    py::class_<LengthDistribution>(m, "LengthDistribution")
        .def_readonly("histogram", &LengthDistribution::histogram)
        .def_readonly("median", &LengthDistribution::median)
        .def_readonly("max", &LengthDistribution::max)
        .def_readonly("skewness", &LengthDistribution::skewness)
        .def_readonly("positively_skewed", &LengthDistribution::positively_skewed)
        .def_readonly("unreachable", &LengthDistribution::unreachable);
    m.def("path_length_distribution", &path_length_distribution, py::arg("table"));
    m.def("length_distribution_of", &length_distribution_of, py::arg("values"));

    py::class_<BackboneNode>(m, "BackboneNode")
        .def_readonly("field", &BackboneNode::field)
        .def_readonly("label", &BackboneNode::label)
        .def_readonly("division", &BackboneNode::division)
        .def_readonly("size", &BackboneNode::size);
    py::class_<BackboneEdge>(m, "BackboneEdge")
        .def_readonly("source", &BackboneEdge::source)
        .def_readonly("target", &BackboneEdge::target)
        .def_readonly("width", &BackboneEdge::width)
        .def_readonly("bidirectional", &BackboneEdge::bidirectional);
    py::class_<BackboneGraph>(m, "BackboneGraph")
        .def_readonly("nodes", &BackboneGraph::nodes)
        .def_readonly("edges", &BackboneGraph::edges);
    m.def(
        "extract_backbone",
        [](const FlowNetwork& net, const FieldTable& fields, int top_k,
           std::optional<double> min_width, std::optional<Division> division,
           double asymmetry_threshold) {
            BackboneOptions options;
            options.top_k = top_k;
            options.min_width = min_width;
            options.division = division;
            options.asymmetry_threshold = asymmetry_threshold;
            return extract_backbone(net, fields, options);
        },
        py::arg("net"), py::arg("fields"), py::arg("top_k") = 1,
        py::arg("min_width") = std::nullopt, py::arg("division") = std::nullopt,
        py::arg("asymmetry_threshold") = 0.2);

    m.def(
        "emit_indicator_reports",
        [](const IndicatorReport& report, const FieldTable& fields,
           const std::filesystem::path& dir, bool full_precision) {
            emit_indicator_reports(report, fields, dir, export_options(full_precision));
        },
        py::arg("report"), py::arg("fields"), py::arg("dir"), py::arg("full_precision") = false);
    m.def(
        "emit_heatmap",
        [](const HeatMap& map, const std::filesystem::path& dir, bool full_precision) {
            return emit_heatmap(map, dir, export_options(full_precision));
        },
        py::arg("map"), py::arg("dir"), py::arg("full_precision") = false);
    m.def(
        "heatmap_grid_csv",
        [](const HeatMap& map, bool full_precision) {
            return to_string_via(
                [&](std::ostream& out) { write_heatmap_grid(out, map, export_options(full_precision)); });
        },
        py::arg("map"), py::arg("full_precision") = false);
    m.def(
        "parse_heatmap_grid",
        [](const std::string& text, TaxonomyLevel level, PathMetric metric, bool full_precision) {
            std::istringstream in(text);
            return read_heatmap_grid(in, level, metric, export_options(full_precision));
        },
        py::arg("text"), py::arg("level"), py::arg("metric"), py::arg("full_precision") = false);
    m.def(
        "path_types_csv",
        [](const PathTypeCensus& census) {
            return to_string_via([&](std::ostream& out) { write_path_types_csv(out, census); });
        },
        py::arg("census"));
    m.def(
        "distribution_csv",
        [](const LengthDistribution& dist) {
            return to_string_via([&](std::ostream& out) { write_distribution_csv(out, dist); });
        },
        py::arg("dist"));
    m.def(
        "backbone_dot",
        [](const BackboneGraph& graph) {
            return to_string_via([&](std::ostream& out) { write_backbone_dot(out, graph); });
        },
        py::arg("graph"));
    m.def(
        "backbone_graphml",
        [](const BackboneGraph& graph) {
            return to_string_via([&](std::ostream& out) { write_backbone_graphml(out, graph); });
        },
        py::arg("graph"));
    m.def(
        "citation_matrix_csv",
        [](const CitationMatrix& matrix, const FieldTable& fields) {
            return to_string_via(
                [&](std::ostream& out) { write_citation_matrix_csv(out, matrix, fields); });
        },
        py::arg("matrix"), py::arg("fields"));
}
