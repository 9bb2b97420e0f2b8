#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knowpath/field_table.hpp"
#include "knowpath/shortest_paths.hpp"

namespace knowpath {

/// Role of a field in a knowledge flow: `source` averages over its rows
/// (paths it originates), `destination` over its columns.
enum class Direction { source, destination };

/// Per-field mean / population SD / max of spl or spw over all counterparts,
/// self included. Unreachable pairs are excluded; `excluded[i]` reports how
/// many counterparts were skipped for field i.
struct IndicatorStats {
    std::vector<double> mean;
    std::vector<double> sd;
    std::vector<double> max;
    std::vector<int> excluded;
};

IndicatorStats compute_aspl(const PathTable& table, Direction direction);
IndicatorStats compute_aspw(const PathTable& table, Direction direction);

/// Occurrence in shortest paths: how often each field sits strictly between
/// the endpoints of a chosen shortest path, over all ordered reachable pairs
/// i != j. Endpoints and self-paths never count.
std::vector<std::int64_t> compute_oisp(const PathTable& table);

struct IndicatorReport {
    IndicatorStats aspl_source;
    IndicatorStats aspl_destination;
    IndicatorStats aspw_source;
    IndicatorStats aspw_destination;
    std::vector<std::int64_t> oisp;
};

IndicatorReport compute_indicators(const PathTable& table);

enum class Metric { aspl, aspw, oisp };

struct RankEntry {
    int field;
    double value;
};

/// Top-k fields under a metric: ascending for aspl/aspw (shorter is better),
/// descending for oisp; ties break toward the smaller field index. Direction
/// is ignored for oisp. `division` restricts the candidates; k past the end
/// returns everything available.
std::vector<RankEntry> rank_fields(const IndicatorReport& report, const FieldTable& fields,
                                   Metric metric, Direction direction,
                                   std::optional<Division> division, std::size_t k);

} // namespace knowpath
