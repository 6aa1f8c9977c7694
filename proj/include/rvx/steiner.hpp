#pragma once

#include "rvx/graph.hpp"

namespace rvx {

/// Minimum edge count of a connected subgraph containing all of `terminals`.
/// Terminal-subset dynamic program over states (vertex, covered terminals).
/// Requires a connected graph and at least 2 terminals.
int steiner_distance(const Graph& g, Bits terminals);

/// Max of steiner_distance over all k-subsets containing v.
int steiner_eccentricity(const Graph& g, int k, int v);

/// Steiner k-diameter: max Steiner distance over all k-subsets.
int sdiam(const Graph& g, int k);

/// Enumerates k-subsets of {0..n-1} in lexicographic order of their sorted
/// vertex lists; calls fn(mask) for each. fn returning false stops early.
template <typename Fn>
void for_each_subset_lex(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Bits mask = 0;
        for (int i : idx) mask |= bit(i);
        if (!fn(mask)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace rvx
