#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knowpath/field_table.hpp"
#include "knowpath/flow_network.hpp"

namespace knowpath {

/// Selection rules for the backbone graph. Exactly one of the selection
/// modes applies per edge set: when `min_width` is set it replaces the
/// per-node top-k rule.
struct BackboneOptions {
    int top_k = 1;                           // strongest outgoing edges per node
    std::optional<double> min_width;         // keep edges with width >= threshold instead
    std::optional<Division> division;        // restrict nodes (and so edges) to one division
    double asymmetry_threshold = 0.2;        // min/max width ratio for the two-way flag
};

struct BackboneNode {
    int field = 0;            // index into the field table
    std::string label;
    Division division = Division::science;
    double size = 0.0;        // total outgoing flow width in the full network
};

struct BackboneEdge {
    int source = 0;           // positions in BackboneGraph::nodes
    int target = 0;
    double width = 0.0;
    bool bidirectional = false;
};

struct BackboneGraph {
    std::vector<BackboneNode> nodes;
    std::vector<BackboneEdge> edges;
};

/// Extracts the reduced flow graph: nodes of the requested division (all by
/// default) and, per node, either its top-k widest outgoing edges or every
/// edge at least `min_width` wide. top_k of 0 (without min_width) yields a
/// fully empty graph. An edge pair {i->j, j->i} is flagged bidirectional
/// when the *full network's* smaller width is at least
/// `asymmetry_threshold` times the larger; the flag marks kept edges only.
/// Edges and nodes keep ascending field order. Throws std::invalid_argument
/// on negative top_k or a non-positive threshold.
BackboneGraph extract_backbone(const FlowNetwork& net, const FieldTable& fields,
                               const BackboneOptions& options = {});

} // namespace knowpath
