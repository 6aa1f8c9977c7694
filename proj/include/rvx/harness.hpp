#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rvx/graph.hpp"
#include "rvx/rainbow.hpp"

namespace rvx {

struct Counterexample {
    std::string g6;
    int k = 0;
    int computed = 0;
};

struct ClaimInstance {
    std::string params;
    std::string expected;
    std::string computed;
    std::string status;  // confirmed | refuted | skipped
    std::optional<Counterexample> counterexample;
};

struct ClaimReport {
    std::string id;
    std::vector<ClaimInstance> instances;
    std::vector<std::string> notes;

    bool any_refuted() const;
    int count(const std::string& status) const;
};

/// Re-runs the solver on an embedded counterexample and checks that the
/// recorded value reproduces.
bool reverify(const Counterexample& ce);

// ---- result cache --------------------------------------------------------
// Line format: "<canonical graph6>\t<k>\t<rvx>". Append-only.

class RvxCache {
public:
    static RvxCache load(const std::string& path);  // missing file -> empty cache
    void store(const std::string& path) const;

    std::optional<int> lookup(const Graph& g, int k) const;
    void insert(const Graph& g, int k, int value);
    std::size_t size() const { return entries_.size(); }
    const std::map<std::pair<std::string, int>, int>& entries() const { return entries_; }

private:
    std::map<std::pair<std::string, int>, int> entries_;
};

/// rvx value via the cache when one is attached; misses are inserted.
int cached_rvx(const Graph& g, int k, RvxCache* cache);

// ---- sweeps --------------------------------------------------------------

struct NgSweepResult {
    int n = 0;
    long long pairs_examined = 0;
    int min_sum = 0;
    int max_sum = 0;
    std::vector<std::string> min_pairs;  // graph6 of the kept representative G
    std::vector<std::string> max_pairs;
    std::string bound_status;  // "within-bounds" or a violation note
};

NgSweepResult ng_sweep(int n, RvxCache* cache = nullptr);
NgSweepResult ng_sweep_over(const std::vector<Graph>& graphs, int n, RvxCache* cache = nullptr);

struct TSearchResult {
    int n = 0, k = 0, ell = 0;
    int t_value = 0;
    std::vector<std::string> extremal;  // graph6, canonical-form order
    std::string bound_status;
};

TSearchResult t_search(int n, int k, int ell, RvxCache* cache = nullptr);

// ---- claim suites --------------------------------------------------------

/// rvx_3 = 0 iff the minimum degree is at least n-2, over every connected
/// graph on n vertices.
ClaimReport check_prop3(int n, RvxCache* cache = nullptr);

/// The four closed-form family values (complete bipartite with k=2,
/// complete multipartite, wheels, paths), instance by instance up to
/// max_order. Statuses are reported, not asserted.
ClaimReport check_obs1(int max_order, RvxCache* cache = nullptr);

/// Builds the rose-with-tail graph, applies its explicit coloring, and runs
/// the verifier.
ClaimReport check_theorem3_construction(int n, int ell, int k);
VertexColoring theorem3_coloring(int n, int ell);

/// Attach a new vertex to `trials` random q-subsets; with q >= n - rvx_3(G)
/// the index must not grow, and for any q >= 1 it grows by at most 1.
/// Seeded deterministically from (graph key, q).
ClaimReport check_lemma3(const Graph& g, int q, int trials, RvxCache* cache = nullptr);

ClaimReport check_example1(int n);

/// Reports rvx_k for k = 2..n and whether the chain rvx_2 <= ... <= rvx_n
/// holds; never asserts.
ClaimReport check_monotonic_chain(const Graph& g, RvxCache* cache = nullptr);

}  // namespace rvx
