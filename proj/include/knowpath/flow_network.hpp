#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "knowpath/citation_matrix.hpp"

namespace knowpath {

struct FlowEdge {
    int target;
    double dist;  // 1 / width
    double width; // citations from target to source field
};

/// Weighted directed knowledge-flow network. A citation j -> i (j cites i)
/// becomes the flow edge i -> j: knowledge flows from the cited field to the
/// citing field, with distance 1 / citations. No self-edges; all distances
/// are positive and finite. Immutable after build; safe to share across
/// threads.
class FlowNetwork {
public:
    /// Builds the network from a citation matrix. Throws
    /// std::invalid_argument when every cell is zero. A matrix holding only
    /// self-citations builds an edgeless network (self-cells never become
    /// edges).
    static FlowNetwork from_citations(const CitationMatrix& m);

    int size() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Outgoing edges of node i, sorted by target index.
    std::span<const FlowEdge> edges_from(int i) const {
        return {edges_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    /// Flow width of edge i -> j, 0 when the edge does not exist.
    double width(int i, int j) const;

    /// Total outgoing flow width of node i (citations received by field i).
    double out_width(int i) const;

private:
    int n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<FlowEdge> edges_;
};

struct ReachabilityReport {
    bool strongly_connected = false;
    /// Unreachable ordered pairs, capped; `missing_total` has the full count.
    std::vector<std::pair<int, int>> missing_pairs;
    std::size_t missing_total = 0;
};

/// Checks whether every ordered pair has a directed path.
ReachabilityReport strongly_connected(const FlowNetwork& net, std::size_t pair_cap = 100);

} // namespace knowpath
