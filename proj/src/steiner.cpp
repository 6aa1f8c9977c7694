#include "rvx/steiner.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

namespace rvx {

namespace {
constexpr int kInf = 1 << 28;
}

int steiner_distance(const Graph& g, Bits terminals) {
    int n = g.order();
    if ((terminals & ~g.vertex_mask()) != 0)
        throw std::invalid_argument("steiner_distance: terminal out of range");
    int t = popcount(terminals);
    if (t < 2) throw std::invalid_argument("steiner_distance: need at least 2 terminals");
    if (!is_connected(g)) throw std::invalid_argument("steiner_distance: graph disconnected");

    // Terminals indexed in ascending vertex order.
    std::vector<int> terms = bits_to_list(terminals);
    std::vector<std::vector<int>> dp(std::size_t{1} << t, std::vector<int>(n, kInf));
    for (int i = 0; i < t; ++i) dp[std::size_t{1} << i][terms[i]] = 0;

    for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
        auto& cur = dp[mask];
        // merge two trees at a shared vertex
        for (std::uint32_t sub = (mask - 1) & mask; sub > (mask ^ sub); sub = (sub - 1) & mask)
            for (int v = 0; v < n; ++v)
                if (dp[sub][v] < kInf && dp[mask ^ sub][v] < kInf)
                    cur[v] = std::min(cur[v], dp[sub][v] + dp[mask ^ sub][v]);
        // grow along edges (unit weights: Dijkstra)
        using Item = std::pair<int, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        for (int v = 0; v < n; ++v)
            if (cur[v] < kInf) pq.push({cur[v], v});
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (d > cur[v]) continue;
            for (Bits nb = g.neighbors(v); nb; nb &= nb - 1) {
                int u = lowest_bit(nb);
                if (d + 1 < cur[u]) {
                    cur[u] = d + 1;
                    pq.push({d + 1, u});
                }
            }
        }
    }

    int best = kInf;
    for (int v = 0; v < n; ++v) best = std::min(best, dp[(std::size_t{1} << t) - 1][v]);
    return best;
}

int steiner_eccentricity(const Graph& g, int k, int v) {
    int n = g.order();
    if (k < 2 || k > n) throw std::invalid_argument("steiner_eccentricity: k out of range");
    if (v < 0 || v >= n) throw std::invalid_argument("steiner_eccentricity: vertex out of range");
    int best = 0;
    for_each_subset_lex(n, k, [&](Bits s) {
        if (s & bit(v)) best = std::max(best, steiner_distance(g, s));
        return true;
    });
    return best;
}

int sdiam(const Graph& g, int k) {
    int n = g.order();
    if (k < 2 || k > n) throw std::invalid_argument("sdiam: k out of range");
    if (!is_connected(g)) throw std::invalid_argument("sdiam: graph disconnected");
    int best = 0;
    for_each_subset_lex(n, k, [&](Bits s) {
        best = std::max(best, steiner_distance(g, s));
        return true;
    });
    return best;
}

}  // namespace rvx
