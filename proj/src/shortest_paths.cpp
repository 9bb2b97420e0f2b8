#include "knowpath/shortest_paths.hpp"

#include <algorithm>
#include <queue>
#include <thread>
#include <utility>

namespace knowpath {

std::size_t PathTable::finite_pairs() const {
    return static_cast<std::size_t>(std::count_if(spl_.begin(), spl_.end(),
                                                  [](int l) { return l > 0; }));
}

PathRow dijkstra_from(const FlowNetwork& net, int source) {
    const int n = net.size();
    PathRow row;
    row.pred.assign(n, kNoPred);
    row.spl.assign(n, 0);
    row.spw.assign(n, std::numeric_limits<double>::infinity());
    row.spw[source] = 0.0;
    row.spl[source] = 1;

    // Lazy-deletion binary heap; pairs order by weight, then node index, so
    // equal-weight entries pop lowest-index first.
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    queue.emplace(0.0, source);
    std::vector<char> done(static_cast<std::size_t>(n), 0);

    while (!queue.empty()) {
        auto [weight, u] = queue.top();
        queue.pop();
        if (done[u]) continue;
        done[u] = 1;
        for (const FlowEdge& e : net.edges_from(u)) {
            const int v = e.target;
            if (done[v]) continue;
            const double cand = row.spw[u] + e.dist;
            const bool better = cand < row.spw[v] - kTieEps;
            // On a tie the smaller predecessor index wins and its accumulated
            // sum replaces the stored weight, so pred chains re-sum to spw
            // exactly.
            const bool tie_wins = !better && cand <= row.spw[v] + kTieEps && u < row.pred[v];
            if (better || tie_wins) {
                row.spw[v] = cand;
                row.pred[v] = u;
                row.spl[v] = row.spl[u] + 1;
                queue.emplace(cand, v);
            }
        }
    }
    return row;
}

PathTable all_pairs(const FlowNetwork& net, unsigned threads) {
    const int n = net.size();
    PathTable table(n);
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

    auto run_rows = [&net, &table, n](int first, int step) {
        for (int source = first; source < n; source += step) {
            PathRow row = dijkstra_from(net, source);
            std::copy(row.pred.begin(), row.pred.end(), table.pred_row(source));
            std::copy(row.spl.begin(), row.spl.end(), table.spl_row(source));
            std::copy(row.spw.begin(), row.spw.end(), table.spw_row(source));
        }
    };

    if (threads <= 1) {
        run_rows(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(run_rows, static_cast<int>(t), static_cast<int>(threads));
        }
        for (std::thread& t : pool) t.join();
    }
    return table;
}

std::optional<std::vector<int>> reconstruct_path(const PathTable& table, int i, int j) {
    if (!table.reachable(i, j)) return std::nullopt;
    std::vector<int> nodes;
    nodes.reserve(static_cast<std::size_t>(table.spl(i, j)));
    for (int v = j; v != i; v = table.pred(i, v)) nodes.push_back(v);
    nodes.push_back(i);
    std::reverse(nodes.begin(), nodes.end());
    return nodes;
}

} // namespace knowpath
