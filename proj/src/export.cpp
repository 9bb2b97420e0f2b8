#include "knowpath/export.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "csv.hpp"
#include "knowpath/errors.hpp"

namespace knowpath {

namespace {

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string real(double v, const ExportOptions& options, int decimals = 6) {
    return options.full_precision ? shortest(v) : fixed(v, decimals);
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

const char* kTieBreakNote =
    "# tie-break: equal-weight paths within 1e-15 resolve toward the smaller predecessor index\n";

std::int64_t total_excluded(const IndicatorStats& stats) {
    std::int64_t total = 0;
    for (int e : stats.excluded) total += e;
    return total;
}

void field_prefix(std::ostream& out, const FieldTable& fields, int i) {
    out << csv::quote(fields.category(i)) << ',' << csv::quote(fields.field_class(i)) << ','
        << division_token(fields.division(i));
}

std::string dot_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

void emit_indicator_reports(const IndicatorReport& report, const FieldTable& fields,
                            const std::filesystem::path& dir, const ExportOptions& options) {
    const int n = fields.size();
    if (static_cast<std::size_t>(n) != report.oisp.size()) {
        throw std::invalid_argument("field table and indicator report sizes differ");
    }
    const std::int64_t excluded = total_excluded(report.aspl_source);

    {
        std::ofstream out = open_out(dir / "aspl.csv");
        out << kTieBreakNote
            << "# spread: population standard deviation over counterparts, self pair included\n"
            << "# unreachable ordered pairs excluded: " << excluded << '\n'
            << "field,class,division,aspl_source,aspl_dest,spl_sd_source,spl_max_source\n";
        for (int i = 0; i < n; ++i) {
            field_prefix(out, fields, i);
            out << ',' << real(report.aspl_source.mean[i], options) << ','
                << real(report.aspl_destination.mean[i], options) << ','
                << real(report.aspl_source.sd[i], options) << ','
                << static_cast<long long>(report.aspl_source.max[i]) << '\n';
        }
    }
    {
        std::ofstream out = open_out(dir / "aspw.csv");
        out << kTieBreakNote << "# unreachable ordered pairs excluded: " << excluded << '\n'
            << "field,class,division,aspw_source,aspw_dest\n";
        for (int i = 0; i < n; ++i) {
            field_prefix(out, fields, i);
            out << ',' << real(report.aspw_source.mean[i], options) << ','
                << real(report.aspw_destination.mean[i], options) << '\n';
        }
    }
    {
        std::ofstream out = open_out(dir / "oisp.csv");
        out << kTieBreakNote
            << "# intermediates: strict interior nodes only; endpoints and self paths never counted\n"
            << "# unreachable ordered pairs excluded: " << excluded << '\n'
            << "field,class,division,oisp\n";
        for (int i = 0; i < n; ++i) {
            field_prefix(out, fields, i);
            out << ',' << report.oisp[i] << '\n';
        }
    }
}

void write_heatmap_grid(std::ostream& out, const HeatMap& map, const ExportOptions& options) {
    const int g = map.size();
    for (int c = 0; c < g; ++c) out << ',' << csv::quote(map.labels[c]);
    out << '\n';
    for (int r = 0; r < g; ++r) {
        out << csv::quote(map.labels[r]);
        for (int c = 0; c < g; ++c) {
            out << ',';
            if (map.count(r, c) == 0) continue;
            const double v = map.cell(r, c);
            if (options.full_precision) out << shortest(v);
            else out << fixed(map.metric == PathMetric::spw ? v * 1e3 : v, 2);
        }
        out << '\n';
    }
}

HeatMap read_heatmap_grid(std::istream& in, TaxonomyLevel level, PathMetric metric,
                          const ExportOptions& options) {
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };
    auto context = [&]() { return "heat map grid:" + std::to_string(lineno) + ": "; };

    if (!next_line()) throw ParseError("heat map grid: empty input");
    std::vector<std::string> header = csv::split(line);
    if (header.size() < 2 || !header[0].empty()) {
        throw ParseError(context() + "expected an empty corner cell followed by labels");
    }

    HeatMap map;
    map.level = level;
    map.metric = metric;
    map.labels.assign(header.begin() + 1, header.end());
    const std::size_t g = map.labels.size();
    map.cells.assign(g * g, std::numeric_limits<double>::quiet_NaN());
    map.counts.assign(g * g, 0);

    for (std::size_t r = 0; r < g; ++r) {
        if (!next_line()) throw ParseError("heat map grid: expected " + std::to_string(g) +
                                           " rows, got " + std::to_string(r));
        std::vector<std::string> row = csv::split(line);
        if (row.size() != g + 1) {
            throw ParseError(context() + "expected " + std::to_string(g + 1) + " fields, got " +
                             std::to_string(row.size()));
        }
        if (row[0] != map.labels[r]) {
            throw ParseError(context() + "row label `" + row[0] + "` does not match column label `" +
                             map.labels[r] + "`");
        }
        for (std::size_t c = 0; c < g; ++c) {
            const std::string& token = row[c + 1];
            if (token.empty()) continue;
            auto value = csv::parse_number(token);
            if (!value) throw ParseError(context() + "invalid cell `" + token + "`");
            double v = *value;
            if (metric == PathMetric::spw && !options.full_precision) v /= 1e3;
            map.cells[r * g + c] = v;
            map.counts[r * g + c] = 1;
        }
    }
    return map;
}

std::filesystem::path emit_heatmap(const HeatMap& map, const std::filesystem::path& dir,
                                   const ExportOptions& options) {
    std::filesystem::path path =
        dir / ("heatmap_" + std::string(level_token(map.level)) + "_" +
               std::string(metric_token(map.metric)) + ".csv");
    std::ofstream out = open_out(path);
    write_heatmap_grid(out, map, options);
    return path;
}

void write_path_types_csv(std::ostream& out, const PathTypeCensus& census) {
    out << "type,count,percent_of_all,percent_of_block\n";
    for (PathType type : kPathTypes) {
        out << path_type_label(type) << ',' << census.count(type) << ','
            << fixed(census.percent_of_all(type), 2) << ','
            << fixed(census.percent_of_block(type), 2) << '\n';
    }
    out << "unreachable," << census.unreachable << ",,\n";
}

void write_distribution_csv(std::ostream& out, const LengthDistribution& dist) {
    out << "# median: " << shortest(dist.median) << '\n'
        << "# max: " << dist.max << '\n'
        << "# skewness: " << fixed(dist.skewness, 6) << '\n'
        << "# positively skewed: " << (dist.positively_skewed ? "yes" : "no") << '\n'
        << "# unreachable ordered pairs excluded: " << dist.unreachable << '\n'
        << "spl,count\n";
    for (const auto& [spl, count] : dist.histogram) out << spl << ',' << count << '\n';
}

void write_backbone_dot(std::ostream& out, const BackboneGraph& graph) {
    out << "digraph backbone {\n"
        << "  // dir=both marks flows whose reverse is comparably wide\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const BackboneNode& node = graph.nodes[i];
        out << "  n" << i << " [label=\"" << dot_escape(node.label) << "\", division="
            << division_token(node.division) << ", size=" << fixed(node.size, 6) << "];\n";
    }
    for (const BackboneEdge& e : graph.edges) {
        out << "  n" << e.source << " -> n" << e.target << " [width=" << fixed(e.width, 6);
        if (e.bidirectional) out << ", dir=both";
        out << "];\n";
    }
    out << "}\n";
}

void write_backbone_graphml(std::ostream& out, const BackboneGraph& graph) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"d0\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"d1\" for=\"node\" attr.name=\"division\" attr.type=\"string\"/>\n"
        << "  <key id=\"d2\" for=\"node\" attr.name=\"size\" attr.type=\"double\"/>\n"
        << "  <key id=\"d3\" for=\"edge\" attr.name=\"width\" attr.type=\"double\"/>\n"
        << "  <key id=\"d4\" for=\"edge\" attr.name=\"bidirectional\" attr.type=\"boolean\"/>\n"
        << "  <graph id=\"backbone\" edgedefault=\"directed\">\n";
    for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
        const BackboneNode& node = graph.nodes[i];
        out << "    <node id=\"n" << i << "\">\n"
            << "      <data key=\"d0\">" << xml_escape(node.label) << "</data>\n"
            << "      <data key=\"d1\">" << division_token(node.division) << "</data>\n"
            << "      <data key=\"d2\">" << fixed(node.size, 6) << "</data>\n"
            << "    </node>\n";
    }
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const BackboneEdge& e = graph.edges[i];
        out << "    <edge id=\"e" << i << "\" source=\"n" << e.source << "\" target=\"n" << e.target
            << "\">\n"
            << "      <data key=\"d3\">" << fixed(e.width, 6) << "</data>\n"
            << "      <data key=\"d4\">" << (e.bidirectional ? "true" : "false") << "</data>\n"
            << "    </edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_citation_matrix_csv(std::ostream& out, const CitationMatrix& matrix,
                               const FieldTable& fields) {
    if (matrix.size() != fields.size()) {
        throw std::invalid_argument("citation matrix and field table sizes differ");
    }
    out << "citing,cited,count\n";
    for (int citing = 0; citing < matrix.size(); ++citing) {
        for (int cited = 0; cited < matrix.size(); ++cited) {
            const double count = matrix.at(citing, cited);
            if (count == 0.0) continue;
            out << csv::quote(fields.category(citing)) << ',' << csv::quote(fields.category(cited))
                << ',' << shortest(count) << '\n';
        }
    }
}

} // namespace knowpath
