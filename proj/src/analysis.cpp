#include "knowpath/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace knowpath {

std::string_view level_token(TaxonomyLevel level) {
    switch (level) {
    case TaxonomyLevel::category: return "category";
    case TaxonomyLevel::class_: return "class";
    case TaxonomyLevel::division: return "division";
    }
    return "";
}

std::string_view metric_token(PathMetric metric) {
    return metric == PathMetric::spl ? "spl" : "spw";
}

namespace {

struct Grouping {
    std::vector<int> group_of;
    std::vector<std::string> labels;
};

Grouping make_grouping(const FieldTable& fields, TaxonomyLevel level) {
    const int n = fields.size();
    Grouping g;
    g.group_of.resize(static_cast<std::size_t>(n));
    switch (level) {
    case TaxonomyLevel::category:
        for (int i = 0; i < n; ++i) {
            g.group_of[i] = i;
            g.labels.push_back(fields.category(i));
        }
        break;
    case TaxonomyLevel::class_:
        for (int i = 0; i < n; ++i) g.group_of[i] = fields.class_index(i);
        g.labels = fields.class_labels();
        break;
    case TaxonomyLevel::division: {
        // Divisions actually present, science first.
        int science = -1, social = -1;
        if (fields.count_in_division(Division::science) > 0) {
            science = static_cast<int>(g.labels.size());
            g.labels.emplace_back(division_token(Division::science));
        }
        if (fields.count_in_division(Division::social_science) > 0) {
            social = static_cast<int>(g.labels.size());
            g.labels.emplace_back(division_token(Division::social_science));
        }
        for (int i = 0; i < n; ++i) {
            g.group_of[i] = fields.division(i) == Division::science ? science : social;
        }
        break;
    }
    }
    return g;
}

HeatMap from_sums(TaxonomyLevel level, PathMetric metric, std::vector<std::string> labels,
                  std::vector<double> sums, std::vector<std::int64_t> counts) {
    HeatMap map;
    map.level = level;
    map.metric = metric;
    map.labels = std::move(labels);
    map.counts = std::move(counts);
    map.cells.resize(sums.size());
    for (std::size_t c = 0; c < sums.size(); ++c) {
        map.cells[c] = map.counts[c] > 0 ? sums[c] / map.counts[c]
                                         : std::numeric_limits<double>::quiet_NaN();
    }
    return map;
}

} // namespace

HeatMap aggregate_heatmap(const PathTable& table, const FieldTable& fields, TaxonomyLevel level,
                          PathMetric metric) {
    const int n = table.size();
    if (n != fields.size()) {
        throw std::invalid_argument("path table and field table sizes differ");
    }
    Grouping grouping = make_grouping(fields, level);
    const std::size_t g = grouping.labels.size();

    std::vector<int> members(g, 0);
    for (int i = 0; i < n; ++i) ++members[grouping.group_of[i]];
    for (std::size_t r = 0; r < g; ++r) {
        if (members[r] == 0) {
            throw std::invalid_argument("group `" + grouping.labels[r] + "` has no members");
        }
    }

    std::vector<double> sums(g * g, 0.0);
    std::vector<std::int64_t> counts(g * g, 0);
    for (int i = 0; i < n; ++i) {
        const std::size_t row = static_cast<std::size_t>(grouping.group_of[i]) * g;
        for (int j = 0; j < n; ++j) {
            if (!table.reachable(i, j)) continue;
            const std::size_t cell = row + grouping.group_of[j];
            sums[cell] += metric == PathMetric::spl ? static_cast<double>(table.spl(i, j))
                                                    : table.spw(i, j);
            ++counts[cell];
        }
    }
    return from_sums(level, metric, std::move(grouping.labels), std::move(sums), std::move(counts));
}

HeatMap reaggregate_heatmap(const HeatMap& map, const std::vector<int>& group_of,
                            std::vector<std::string> labels, TaxonomyLevel level) {
    const std::size_t old_g = map.labels.size();
    if (group_of.size() != old_g) {
        throw std::invalid_argument("grouping size does not match heat map size");
    }
    const std::size_t g = labels.size();
    std::vector<double> sums(g * g, 0.0);
    std::vector<std::int64_t> counts(g * g, 0);
    for (std::size_t r = 0; r < old_g; ++r) {
        for (std::size_t c = 0; c < old_g; ++c) {
            const std::int64_t count = map.count(static_cast<int>(r), static_cast<int>(c));
            if (count == 0) continue;
            const int nr = group_of[r];
            const int nc = group_of[c];
            if (nr < 0 || static_cast<std::size_t>(nr) >= g || nc < 0 ||
                static_cast<std::size_t>(nc) >= g) {
                throw std::invalid_argument("grouping target out of range");
            }
            const std::size_t cell = static_cast<std::size_t>(nr) * g + nc;
            sums[cell] += map.cell(static_cast<int>(r), static_cast<int>(c)) * count;
            counts[cell] += count;
        }
    }
    return from_sums(level, map.metric, std::move(labels), std::move(sums), std::move(counts));
}

std::string_view path_type_label(PathType type) {
    switch (type) {
    case PathType::s_to_s: return "S->S";
    case PathType::s_via_ss_to_s: return "S->SS->S";
    case PathType::s_to_ss: return "S->SS";
    case PathType::s_detour_to_ss: return "S-detour->SS";
    case PathType::ss_to_s: return "SS->S";
    case PathType::ss_detour_to_s: return "SS-detour->S";
    case PathType::ss_to_ss: return "SS->SS";
    case PathType::ss_via_s_to_ss: return "SS->S->SS";
    }
    return "";
}

std::int64_t PathTypeCensus::classified_total() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t PathTypeCensus::block_total(PathType t) const {
    const std::size_t base = (static_cast<std::size_t>(t) / 2) * 2;
    return counts[base] + counts[base + 1];
}

double PathTypeCensus::percent_of_all(PathType t) const {
    const std::int64_t total = classified_total();
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(count(t)) / static_cast<double>(total);
}

double PathTypeCensus::percent_of_block(PathType t) const {
    const std::int64_t total = block_total(t);
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(count(t)) / static_cast<double>(total);
}

PathTypeCensus classify_paths(const PathTable& table, const FieldTable& fields) {
    const int n = table.size();
    if (n != fields.size()) {
        throw std::invalid_argument("path table and field table sizes differ");
    }
    PathTypeCensus census;
    for (int i = 0; i < n; ++i) {
        const bool from_science = fields.division(i) == Division::science;
        for (int j = 0; j < n; ++j) {
            if (!table.reachable(i, j)) {
                ++census.unreachable;
                continue;
            }
            int switches = 0;
            for (int v = j; v != i;) {
                const int p = table.pred(i, v);
                if (fields.division(p) != fields.division(v)) ++switches;
                v = p;
            }
            const bool to_science = fields.division(j) == Division::science;
            const bool minimal = switches == (from_science == to_science ? 0 : 1);
            PathType type;
            if (from_science && to_science) {
                type = minimal ? PathType::s_to_s : PathType::s_via_ss_to_s;
            } else if (from_science) {
                type = minimal ? PathType::s_to_ss : PathType::s_detour_to_ss;
            } else if (to_science) {
                type = minimal ? PathType::ss_to_s : PathType::ss_detour_to_s;
            } else {
                type = minimal ? PathType::ss_to_ss : PathType::ss_via_s_to_ss;
            }
            ++census.counts[static_cast<std::size_t>(type)];
        }
    }
    return census;
}

LengthDistribution length_distribution_of(std::vector<int> values) {
    LengthDistribution dist;
    if (values.empty()) return dist;
    std::sort(values.begin(), values.end());
    for (int v : values) ++dist.histogram[v];
    dist.max = values.back();
    const std::size_t m = values.size();
    dist.median = m % 2 == 1 ? values[m / 2]
                             : (values[m / 2 - 1] + values[m / 2]) / 2.0;
    double mean = 0.0;
    for (int v : values) mean += v;
    mean /= static_cast<double>(m);
    double m2 = 0.0, m3 = 0.0;
    for (int v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(m);
    m3 /= static_cast<double>(m);
    dist.skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    dist.positively_skewed = dist.skewness > 0.0;
    return dist;
}

LengthDistribution path_length_distribution(const PathTable& table) {
    const int n = table.size();
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    std::int64_t unreachable = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (table.reachable(i, j)) values.push_back(table.spl(i, j));
            else ++unreachable;
        }
    }
    LengthDistribution dist = length_distribution_of(std::move(values));
    dist.unreachable = unreachable;
    return dist;
}

} // namespace knowpath
