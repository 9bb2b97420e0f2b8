#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "knowpath/flow_network.hpp"

namespace knowpath {

/// Absolute tolerance under which two tentative path weights count as tied.
inline constexpr double kTieEps = 1e-15;

/// Sentinel predecessor: unreachable targets and the diagonal carry -1.
inline constexpr int kNoPred = -1;

/// All-pairs shortest-path results. spl counts NODES on the chosen path
/// (1 for a field to itself); spw is the accumulated distance (0 on the
/// diagonal, +inf when unreachable).
class PathTable {
public:
    PathTable() = default;
    PathTable(int n)
        : n_(n),
          pred_(static_cast<std::size_t>(n) * n, kNoPred),
          spl_(static_cast<std::size_t>(n) * n, 0),
          spw_(static_cast<std::size_t>(n) * n, std::numeric_limits<double>::infinity()) {}

    int size() const { return n_; }

    int pred(int i, int j) const { return pred_[idx(i, j)]; }
    int spl(int i, int j) const { return spl_[idx(i, j)]; }
    double spw(int i, int j) const { return spw_[idx(i, j)]; }
    bool reachable(int i, int j) const { return spl_[idx(i, j)] > 0; }

    /// Number of ordered pairs (self included) with a finite path.
    std::size_t finite_pairs() const;

    int* pred_row(int i) { return pred_.data() + idx(i, 0); }
    int* spl_row(int i) { return spl_.data() + idx(i, 0); }
    double* spw_row(int i) { return spw_.data() + idx(i, 0); }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_ = 0;
    std::vector<int> pred_;
    std::vector<int> spl_;
    std::vector<double> spw_;
};

/// Single-source row of a PathTable.
struct PathRow {
    std::vector<int> pred;
    std::vector<int> spl;
    std::vector<double> spw;
};

/// Dijkstra from `source` with deterministic tie-breaking: when two
/// tentative paths to a node weigh the same within kTieEps, the one whose
/// predecessor has the smaller field index wins (and the stored weight is
/// rewritten to the chosen path's accumulated sum, so walking the pred chain
/// reproduces spw exactly); among equal-weight heap entries the smaller
/// index pops first. Unreachable targets keep their sentinels.
PathRow dijkstra_from(const FlowNetwork& net, int source);

/// Runs dijkstra_from for every source. Rows are independent; with
/// `threads` > 1 (0 = hardware concurrency) sources are processed in
/// parallel over the shared immutable network. Results do not depend on the
/// thread count.
PathTable all_pairs(const FlowNetwork& net, unsigned threads = 0);

/// Node sequence of the chosen shortest path, starting at i and ending at j
/// ([i] when j == i). Empty optional when j is unreachable from i.
std::optional<std::vector<int>> reconstruct_path(const PathTable& table, int i, int j);

} // namespace knowpath
