#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "knowpath/analysis.hpp"
#include "knowpath/backbone.hpp"
#include "knowpath/citation_matrix.hpp"
#include "knowpath/errors.hpp"
#include "knowpath/export.hpp"
#include "knowpath/field_table.hpp"
#include "knowpath/flow_network.hpp"
#include "knowpath/indicators.hpp"
#include "knowpath/shortest_paths.hpp"

namespace {

constexpr int kExitInputError = 2;
constexpr int kExitConfigError = 3;

struct RunConfig {
    std::string taxonomy;
    std::string citations;
    std::string journal_cites;
    std::string journal_map;
    std::string out_dir = ".";
    bool drop_self = false;
    bool full_precision = false;
};

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void note_written(const std::filesystem::path& path) {
    std::cout << "wrote " << path.string() << '\n';
}

knowpath::PathTable compute_paths(const knowpath::FlowNetwork& net) {
    knowpath::PathTable table = knowpath::all_pairs(net);
    const std::size_t all = static_cast<std::size_t>(net.size()) * net.size();
    const std::size_t missing = all - table.finite_pairs();
    if (missing > 0) {
        std::cerr << "warning: " << missing
                  << " ordered field pairs are unreachable and excluded from averages\n";
    }
    return table;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"knowledge-flow network analysis over inter-field citation counts"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    app.add_option("--taxonomy", config.taxonomy, "taxonomy CSV (category,class,division)")
        ->required()
        ->check(CLI::ExistingFile);
    auto* citations =
        app.add_option("--citations", config.citations, "field citations CSV (citing,cited,count)")
            ->check(CLI::ExistingFile);
    auto* journal_cites =
        app.add_option("--journal-cites", config.journal_cites,
                       "journal citations CSV (citing_journal,cited_journal,count)")
            ->check(CLI::ExistingFile);
    auto* journal_map = app.add_option("--journal-map", config.journal_map,
                                       "journal assignment CSV (journal,category)")
                            ->check(CLI::ExistingFile);
    citations->excludes(journal_cites)->excludes(journal_map);
    journal_cites->needs(journal_map);
    journal_map->needs(journal_cites);
    app.add_flag("--drop-self", config.drop_self,
                 "drop self-citation records at load (citing == cited)");
    app.add_option("--out", config.out_dir, "output directory, created when missing");
    app.add_flag("--full-precision", config.full_precision,
                 "emit shortest round-trip reals instead of fixed decimals");

    CLI::App* indicators =
        app.add_subcommand("indicators", "per-field indicator tables (aspl, aspw, oisp)");

    std::string level = "category";
    std::string metric = "spl";
    CLI::App* heatmap =
        app.add_subcommand("heatmap", "mean path length/weight grid at a taxonomy level");
    heatmap->add_option("--level", level, "aggregation level")
        ->check(CLI::IsMember({"category", "class", "division"}));
    heatmap->add_option("--metric", metric, "path metric")->check(CLI::IsMember({"spl", "spw"}));

    CLI::App* classify =
        app.add_subcommand("classify", "census of the eight division-pattern path types");

    int top_k = 1;
    double min_width = 0.0;
    double asymmetry = 0.2;
    std::string division = "all";
    CLI::App* backbone = app.add_subcommand("backbone", "dominant-flow subgraph (DOT + GraphML)");
    backbone->add_option("--top-k", top_k, "widest outgoing edges kept per node");
    CLI::Option* min_width_opt = backbone->add_option(
        "--min-width", min_width, "keep edges at least this wide instead of top-k");
    backbone->add_option("--division", division, "restrict nodes to one division")
        ->check(CLI::IsMember({"science", "social_science", "all"}));
    backbone->add_option("--asymmetry-threshold", asymmetry,
                         "min/max width ratio that marks a pair bidirectional");

    CLI::App* distribution =
        app.add_subcommand("distribution", "path length histogram and summary statistics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    if (config.citations.empty() && config.journal_cites.empty()) {
        std::cerr << "error: provide --citations or --journal-cites with --journal-map\n";
        return kExitConfigError;
    }
    if (*backbone) {
        // Flag-value misuse is a configuration error, not an input error, so
        // it is rejected before any file is read.
        if (top_k < 0) {
            std::cerr << "error: --top-k must be non-negative\n";
            return kExitConfigError;
        }
        if (min_width_opt->count() > 0 && !(min_width > 0.0)) {
            std::cerr << "error: --min-width must be positive\n";
            return kExitConfigError;
        }
        if (!(asymmetry > 0.0) || asymmetry > 1.0) {
            std::cerr << "error: --asymmetry-threshold must be in (0, 1]\n";
            return kExitConfigError;
        }
    }

    try {
        const knowpath::FieldTable fields = knowpath::load_taxonomy(config.taxonomy);
        knowpath::IngestOptions ingest;
        ingest.drop_self = config.drop_self;
        const knowpath::CitationMatrix matrix =
            !config.citations.empty()
                ? knowpath::load_category_citations(config.citations, fields, ingest)
                : knowpath::collapse_journal_citations(config.journal_cites, config.journal_map,
                                                       fields, ingest);
        const knowpath::FlowNetwork net = knowpath::FlowNetwork::from_citations(matrix);

        const std::filesystem::path out_dir(config.out_dir);
        std::filesystem::create_directories(out_dir);
        knowpath::ExportOptions export_options;
        export_options.full_precision = config.full_precision;

        if (*indicators) {
            const knowpath::PathTable table = compute_paths(net);
            knowpath::emit_indicator_reports(knowpath::compute_indicators(table), fields, out_dir,
                                             export_options);
            for (const char* name : {"aspl.csv", "aspw.csv", "oisp.csv"}) {
                note_written(out_dir / name);
            }
        } else if (*heatmap) {
            const knowpath::PathTable table = compute_paths(net);
            const auto lvl = level == "category"   ? knowpath::TaxonomyLevel::category
                             : level == "class"    ? knowpath::TaxonomyLevel::class_
                                                   : knowpath::TaxonomyLevel::division;
            const auto met =
                metric == "spl" ? knowpath::PathMetric::spl : knowpath::PathMetric::spw;
            const knowpath::HeatMap map = knowpath::aggregate_heatmap(table, fields, lvl, met);
            note_written(knowpath::emit_heatmap(map, out_dir, export_options));
        } else if (*classify) {
            const knowpath::PathTable table = compute_paths(net);
            const knowpath::PathTypeCensus census = knowpath::classify_paths(table, fields);
            const std::filesystem::path path = out_dir / "path_types.csv";
            std::ofstream out = open_out(path);
            knowpath::write_path_types_csv(out, census);
            note_written(path);
        } else if (*backbone) {
            knowpath::BackboneOptions options;
            options.top_k = top_k;
            if (min_width_opt->count() > 0) options.min_width = min_width;
            if (division != "all") options.division = knowpath::parse_division(division);
            options.asymmetry_threshold = asymmetry;
            const knowpath::BackboneGraph graph =
                knowpath::extract_backbone(net, fields, options);
            const std::filesystem::path dot_path = out_dir / "backbone.dot";
            {
                std::ofstream out = open_out(dot_path);
                knowpath::write_backbone_dot(out, graph);
            }
            note_written(dot_path);
            const std::filesystem::path graphml_path = out_dir / "backbone.graphml";
            {
                std::ofstream out = open_out(graphml_path);
                knowpath::write_backbone_graphml(out, graph);
            }
            note_written(graphml_path);
        } else if (*distribution) {
            const knowpath::PathTable table = compute_paths(net);
            const knowpath::LengthDistribution dist = knowpath::path_length_distribution(table);
            const std::filesystem::path path = out_dir / "distribution.csv";
            std::ofstream out = open_out(path);
            knowpath::write_distribution_csv(out, dist);
            note_written(path);
        }
        return 0;
    } catch (const knowpath::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
