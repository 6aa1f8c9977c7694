#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rvx/graph.hpp"

namespace rvx {

/// Vertex coloring with color ids 0..num_colors-1. num_colors == 0 is the
/// empty palette: no vertex outside a terminal set may appear in a tree.
struct VertexColoring {
    std::vector<int> colors;
    int num_colors = 0;

    static VertexColoring empty_palette(int n) { return {std::vector<int>(n, 0), 0}; }
    static VertexColoring parse(const std::string& csv);
    std::string to_string() const;
};

void validate_coloring(const Graph& g, const VertexColoring& c);

/// An S-Steiner tree certificate: tree edges plus W = V(T) \ S.
struct WitnessTree {
    std::vector<std::pair<int, int>> edges;
    Bits internal = 0;
};

/// Vertex-rainbow S-tree existence. A tree exists iff some W subseteq V\S
/// with pairwise-distinct colors makes the induced subgraph on S|W
/// connected; W is searched by ascending size, then lexicographically.
std::optional<WitnessTree> exists_rainbow_tree(const Graph& g, const VertexColoring& c, Bits s);

/// nullopt when every k-subset admits a rainbow tree; otherwise the
/// lexicographically first failing subset.
std::optional<Bits> first_failing_subset(const Graph& g, const VertexColoring& c, int k);

inline bool is_k_rainbow_coloring(const Graph& g, const VertexColoring& c, int k) {
    return !first_failing_subset(g, c, k).has_value();
}

/// 0 when sdiam_k(G) = k-1, else 1.
int rvx_lower_bound(const Graph& g, int k);

/// BFS spanning tree from vertex 0; internal tree vertices get distinct
/// colors, leaves reuse color 0. Uses at most n-2 colors for n >= 3.
VertexColoring rvx_upper_bound_coloring(const Graph& g, int k);

struct RvxStats {
    long long colorings_examined = 0;
    long long subsets_checked = 0;
};

struct RvxResult {
    int k = 0;
    int value = -1;
    bool exceeded = false;  // true when max_colors was given and no coloring within it works
    int max_colors = -1;
    VertexColoring witness;
    RvxStats stats;
    std::map<Bits, WitnessTree> certificates;
};

/// Exact rvx_k(G). Ascends the color count from 0, enumerating colorings as
/// restricted-growth strings that use the exact count; reports the first
/// accepting coloring in RGS order. k-subsets are checked in descending
/// Steiner-distance order (ties lexicographic) so hard subsets fail fast.
RvxResult rvx(const Graph& g, int k, std::optional<int> max_colors = std::nullopt,
              bool want_certificates = false);

/// Independent oracle (n <= 7): for each candidate color count enumerate all
/// colorings and decide each k-subset by scanning every vertex superset for
/// a connected induced subgraph with distinct colors off S. No RGS
/// reduction, no internal-set shortcut.
int brute_force_rvx(const Graph& g, int k);

}  // namespace rvx
