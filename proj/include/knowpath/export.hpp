#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "knowpath/analysis.hpp"
#include "knowpath/backbone.hpp"
#include "knowpath/citation_matrix.hpp"
#include "knowpath/field_table.hpp"
#include "knowpath/indicators.hpp"

namespace knowpath {

struct ExportOptions {
    bool full_precision = false; // shortest round-trip reals instead of fixed decimals
};

/// Writes aspl.csv, aspw.csv, and oisp.csv into `dir`. Each file opens with
/// `#` metadata lines recording the conventions behind the numbers (path
/// tie-break, intermediate counting, spread flavor, unreachable exclusions).
/// Reals use six fixed decimals unless full precision is requested.
void emit_indicator_reports(const IndicatorReport& report, const FieldTable& fields,
                            const std::filesystem::path& dir, const ExportOptions& options = {});

/// Writes heatmap_<level>_<metric>.csv into `dir` as a labelled grid: empty
/// corner cell, column labels, one labelled row per group. Default precision
/// renders two decimals, with spw cells scaled by 1e3 to keep digits visible;
/// full precision renders unscaled shortest round-trip values. Grid files
/// carry no metadata lines. Returns the written path.
std::filesystem::path emit_heatmap(const HeatMap& map, const std::filesystem::path& dir,
                                   const ExportOptions& options = {});

/// Grid-only writer/reader used by emit_heatmap and by round-trip checks.
/// The reader inverts the writer's conventions for the given options (spw
/// cells unscale by 1e3 at default precision; empty cells read as no-data),
/// so write(read(grid)) reproduces the grid byte for byte.
void write_heatmap_grid(std::ostream& out, const HeatMap& map, const ExportOptions& options = {});
HeatMap read_heatmap_grid(std::istream& in, TaxonomyLevel level, PathMetric metric,
                          const ExportOptions& options = {});

/// path_types.csv: type,count,percent_of_all,percent_of_block (+ unreachable
/// footer row). Percentages use two fixed decimals.
void write_path_types_csv(std::ostream& out, const PathTypeCensus& census);

/// distribution.csv: summary statistics as leading `#` metadata (median,
/// max, skewness, unreachable), then spl,count histogram rows.
void write_distribution_csv(std::ostream& out, const LengthDistribution& dist);

/// Graphviz / GraphML emitters for the backbone. Nodes carry label, division,
/// and size; edges carry width, with two-way pairs marked dir=both (DOT) or
/// bidirectional=true (GraphML). Output order follows the graph's node and
/// edge order, so equal graphs emit identical bytes.
void write_backbone_dot(std::ostream& out, const BackboneGraph& graph);
void write_backbone_graphml(std::ostream& out, const BackboneGraph& graph);

/// Re-emits a citation matrix in the category-citations input schema
/// (citing,cited,count rows in ascending index order, zero cells skipped), so
/// load -> write -> load is an identity.
void write_citation_matrix_csv(std::ostream& out, const CitationMatrix& matrix,
                               const FieldTable& fields);

} // namespace knowpath
