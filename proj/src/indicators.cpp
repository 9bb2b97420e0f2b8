#include "knowpath/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace knowpath {

namespace {

template <typename Value>
IndicatorStats directional_stats(const PathTable& table, Direction direction, Value value) {
    const int n = table.size();
    IndicatorStats stats;
    stats.mean.assign(n, 0.0);
    stats.sd.assign(n, 0.0);
    stats.max.assign(n, 0.0);
    stats.excluded.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        double max_value = 0.0;
        int included = 0;
        for (int j = 0; j < n; ++j) {
            const int from = direction == Direction::source ? i : j;
            const int to = direction == Direction::source ? j : i;
            if (!table.reachable(from, to)) continue;
            const double v = value(from, to);
            sum += v;
            max_value = std::max(max_value, v);
            ++included;
        }
        // The self pair is always reachable, so included >= 1.
        const double mean = sum / included;
        double sq = 0.0;
        for (int j = 0; j < n; ++j) {
            const int from = direction == Direction::source ? i : j;
            const int to = direction == Direction::source ? j : i;
            if (!table.reachable(from, to)) continue;
            const double d = value(from, to) - mean;
            sq += d * d;
        }
        stats.mean[i] = mean;
        stats.sd[i] = std::sqrt(sq / included);
        stats.max[i] = max_value;
        stats.excluded[i] = n - included;
    }
    return stats;
}

} // namespace

IndicatorStats compute_aspl(const PathTable& table, Direction direction) {
    return directional_stats(table, direction, [&table](int from, int to) {
        return static_cast<double>(table.spl(from, to));
    });
}

IndicatorStats compute_aspw(const PathTable& table, Direction direction) {
    return directional_stats(table, direction,
                             [&table](int from, int to) { return table.spw(from, to); });
}

std::vector<std::int64_t> compute_oisp(const PathTable& table) {
    const int n = table.size();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i || !table.reachable(i, j)) continue;
            for (int k = table.pred(i, j); k != i; k = table.pred(i, k)) ++counts[k];
        }
    }
    return counts;
}

IndicatorReport compute_indicators(const PathTable& table) {
    IndicatorReport report;
    report.aspl_source = compute_aspl(table, Direction::source);
    report.aspl_destination = compute_aspl(table, Direction::destination);
    report.aspw_source = compute_aspw(table, Direction::source);
    report.aspw_destination = compute_aspw(table, Direction::destination);
    report.oisp = compute_oisp(table);
    return report;
}

std::vector<RankEntry> rank_fields(const IndicatorReport& report, const FieldTable& fields,
                                   Metric metric, Direction direction,
                                   std::optional<Division> division, std::size_t k) {
    const int n = fields.size();
    if (static_cast<std::size_t>(n) != report.oisp.size()) {
        throw std::invalid_argument("field table and indicator report sizes differ");
    }
    std::vector<RankEntry> entries;
    for (int i = 0; i < n; ++i) {
        if (division && fields.division(i) != *division) continue;
        double value = 0.0;
        switch (metric) {
        case Metric::aspl:
            value = (direction == Direction::source ? report.aspl_source
                                                    : report.aspl_destination).mean[i];
            break;
        case Metric::aspw:
            value = (direction == Direction::source ? report.aspw_source
                                                    : report.aspw_destination).mean[i];
            break;
        case Metric::oisp:
            value = static_cast<double>(report.oisp[i]);
            break;
        }
        entries.push_back({i, value});
    }
    const bool ascending = metric != Metric::oisp;
    std::sort(entries.begin(), entries.end(), [ascending](const RankEntry& a, const RankEntry& b) {
        if (a.value != b.value) return ascending ? a.value < b.value : a.value > b.value;
        return a.field < b.field;
    });
    if (entries.size() > k) entries.resize(k);
    return entries;
}

} // namespace knowpath
