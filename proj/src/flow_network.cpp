#include "knowpath/flow_network.hpp"

#include <algorithm>
#include <stdexcept>

namespace knowpath {

FlowNetwork FlowNetwork::from_citations(const CitationMatrix& m) {
    if (m.empty()) throw std::invalid_argument("citation matrix is empty: no flow edges");
    FlowNetwork net;
    const int n = m.size();
    net.n_ = n;
    net.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    // Edge i -> j carries the knowledge that j's citations of i pull out of i.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double width = m.at(j, i);
            if (j == i || width <= 0.0) continue;
            net.edges_.push_back({j, 1.0 / width, width});
        }
        net.offsets_[static_cast<std::size_t>(i) + 1] = net.edges_.size();
    }
    return net;
}

double FlowNetwork::width(int i, int j) const {
    auto span = edges_from(i);
    auto it = std::lower_bound(span.begin(), span.end(), j,
                               [](const FlowEdge& e, int target) { return e.target < target; });
    if (it == span.end() || it->target != j) return 0.0;
    return it->width;
}

double FlowNetwork::out_width(int i) const {
    double sum = 0.0;
    for (const FlowEdge& e : edges_from(i)) sum += e.width;
    return sum;
}

ReachabilityReport strongly_connected(const FlowNetwork& net, std::size_t pair_cap) {
    ReachabilityReport report;
    const int n = net.size();
    std::vector<char> seen(static_cast<std::size_t>(n));
    std::vector<int> stack;
    for (int source = 0; source < n; ++source) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[source] = 1;
        stack.assign(1, source);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const FlowEdge& e : net.edges_from(u)) {
                if (!seen[e.target]) {
                    seen[e.target] = 1;
                    stack.push_back(e.target);
                }
            }
        }
        for (int j = 0; j < n; ++j) {
            if (seen[j]) continue;
            ++report.missing_total;
            if (report.missing_pairs.size() < pair_cap) report.missing_pairs.emplace_back(source, j);
        }
    }
    report.strongly_connected = report.missing_total == 0;
    return report;
}

} // namespace knowpath
