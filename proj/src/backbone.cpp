#include "knowpath/backbone.hpp"

#include <algorithm>
#include <stdexcept>

namespace knowpath {

BackboneGraph extract_backbone(const FlowNetwork& net, const FieldTable& fields,
                               const BackboneOptions& options) {
    if (net.size() != fields.size()) {
        throw std::invalid_argument("flow network and field table sizes differ");
    }
    if (options.top_k < 0) throw std::invalid_argument("top_k must be non-negative");
    if (options.min_width && !(*options.min_width > 0.0)) {
        throw std::invalid_argument("min_width must be positive");
    }
    if (!(options.asymmetry_threshold > 0.0) || options.asymmetry_threshold > 1.0) {
        throw std::invalid_argument("asymmetry threshold must be in (0, 1]");
    }

    BackboneGraph graph;
    if (options.top_k == 0 && !options.min_width) return graph;
    const int n = net.size();
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        if (options.division && fields.division(i) != *options.division) continue;
        position[i] = static_cast<int>(graph.nodes.size());
        graph.nodes.push_back({i, fields.category(i), fields.division(i), net.out_width(i)});
    }

    std::vector<FlowEdge> kept;
    for (const BackboneNode& node : graph.nodes) {
        auto edges = net.edges_from(node.field);
        kept.clear();
        for (const FlowEdge& e : edges) {
            if (position[e.target] < 0) continue;
            if (options.min_width) {
                if (e.width >= *options.min_width) kept.push_back(e);
            } else {
                kept.push_back(e);
            }
        }
        if (!options.min_width) {
            const std::size_t k = static_cast<std::size_t>(options.top_k);
            if (kept.size() > k) {
                // Widest first; equal widths prefer the smaller target index.
                std::partial_sort(kept.begin(), kept.begin() + k, kept.end(),
                                  [](const FlowEdge& a, const FlowEdge& b) {
                                      if (a.width != b.width) return a.width > b.width;
                                      return a.target < b.target;
                                  });
                kept.resize(k);
            }
            std::sort(kept.begin(), kept.end(),
                      [](const FlowEdge& a, const FlowEdge& b) { return a.target < b.target; });
        }
        for (const FlowEdge& e : kept) {
            const double forward = e.width;
            const double reverse = net.width(e.target, node.field);
            const bool both = reverse > 0.0 &&
                              std::min(forward, reverse) >=
                                  options.asymmetry_threshold * std::max(forward, reverse);
            graph.edges.push_back({position[node.field], position[e.target], e.width, both});
        }
    }
    return graph;
}

} // namespace knowpath
