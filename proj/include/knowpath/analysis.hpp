#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knowpath/field_table.hpp"
#include "knowpath/shortest_paths.hpp"

namespace knowpath {

enum class TaxonomyLevel { category, class_, division };
enum class PathMetric { spl, spw };

std::string_view level_token(TaxonomyLevel level);
std::string_view metric_token(PathMetric metric);

/// Mean spl or spw over member ordered pairs, source along rows and
/// destination along columns. `counts` holds the number of reachable member
/// pairs behind each cell; a cell with count 0 is NaN.
struct HeatMap {
    TaxonomyLevel level = TaxonomyLevel::category;
    PathMetric metric = PathMetric::spl;
    std::vector<std::string> labels;
    std::vector<double> cells;        // row-major, labels.size() squared
    std::vector<std::int64_t> counts; // reachable pairs per cell

    int size() const { return static_cast<int>(labels.size()); }
    double cell(int r, int c) const { return cells[static_cast<std::size_t>(r) * labels.size() + c]; }
    std::int64_t count(int r, int c) const { return counts[static_cast<std::size_t>(r) * labels.size() + c]; }
};

/// Aggregates the path table to the requested taxonomy level. Cells average
/// over member *category pairs* (pair-weighted, not over sub-level cells);
/// self-pairs fall into the diagonal. Throws std::invalid_argument when a
/// group at the requested level has no members.
HeatMap aggregate_heatmap(const PathTable& table, const FieldTable& fields,
                          TaxonomyLevel level, PathMetric metric);

/// Re-aggregates a heat map under a coarser grouping: `group_of[r]` names the
/// new row/column of old row/column r. Cells combine pair-weighted via
/// `counts`, so re-aggregation matches direct aggregation.
HeatMap reaggregate_heatmap(const HeatMap& map, const std::vector<int>& group_of,
                            std::vector<std::string> labels, TaxonomyLevel level);

/// The eight knowledge-path types between science (S) and social science
/// (SS): four endpoint blocks, each split into the minimal pattern and the
/// detour pattern. A path is minimal when its division switch count is the
/// lowest its endpoints allow (0 same-division, 1 cross-division); any extra
/// switching makes it a detour.
enum class PathType {
    s_to_s,          // S -> S, all science
    s_via_ss_to_s,   // S -> SS -> S detour
    s_to_ss,         // S -> SS, single switch
    s_detour_to_ss,  // S -> SS with extra switches
    ss_to_s,         // SS -> S, single switch
    ss_detour_to_s,  // SS -> S with extra switches
    ss_to_ss,        // SS -> SS, all social science
    ss_via_s_to_ss,  // SS -> S -> SS detour
};

inline constexpr std::array<PathType, 8> kPathTypes = {
    PathType::s_to_s,         PathType::s_via_ss_to_s, PathType::s_to_ss,
    PathType::s_detour_to_ss, PathType::ss_to_s,       PathType::ss_detour_to_s,
    PathType::ss_to_ss,       PathType::ss_via_s_to_ss,
};

std::string_view path_type_label(PathType type); // e.g. "SS->S->SS"

struct PathTypeCensus {
    std::array<std::int64_t, 8> counts{};
    std::int64_t unreachable = 0;

    std::int64_t count(PathType t) const { return counts[static_cast<std::size_t>(t)]; }
    std::int64_t classified_total() const;
    std::int64_t block_total(PathType t) const; // minimal + detour of t's block
    double percent_of_all(PathType t) const;    // of all classified paths
    double percent_of_block(PathType t) const;
};

/// Classifies every ordered pair's chosen path by its division sequence.
/// Self-paths are minimal in their block; unreachable pairs are counted
/// separately.
PathTypeCensus classify_paths(const PathTable& table, const FieldTable& fields);

/// Histogram and summary statistics of chosen-path lengths over all
/// reachable ordered pairs (self-pairs form the spl = 1 bin). Skewness is
/// the Fisher moment coefficient (0 when the values do not vary).
struct LengthDistribution {
    std::map<int, std::int64_t> histogram;
    double median = 0.0;
    int max = 0;
    double skewness = 0.0;
    bool positively_skewed = false;
    std::int64_t unreachable = 0;
};

LengthDistribution path_length_distribution(const PathTable& table);

/// Statistics core over raw spl values; exposed for direct use on synthetic
/// length collections.
LengthDistribution length_distribution_of(std::vector<int> values);

} // namespace knowpath
