#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rvx {

// Vertex subsets are 64-bit masks; vertex capacity is 62 so the graph6
// single-byte size form always suffices.
using Bits = std::uint64_t;

constexpr int kMaxVertices = 62;

inline int popcount(Bits b) { return __builtin_popcountll(b); }
inline int lowest_bit(Bits b) { return __builtin_ctzll(b); }
inline Bits bit(int v) { return Bits{1} << v; }
inline Bits full_mask(int n) { return n == 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

std::vector<int> bits_to_list(Bits b);

/// Simple undirected graph with per-vertex adjacency bitsets.
/// Immutable once built; add_edge is only for construction.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    Bits neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    Bits vertex_mask() const { return full_mask(n_); }

    void add_edge(int u, int v);

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<Bits> adj_;
};

// graph6 interchange (single-byte size form, n = 1..62).
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// Edge-list text: first line "n", then lines "u v". Duplicates collapse.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

Graph complement(const Graph& g);
bool is_connected(const Graph& g);
int min_degree(const Graph& g);

// Connected component containing `start`, restricted to `allowed`.
Bits reach(const Graph& g, int start, Bits allowed);

/// Lexicographically minimal upper-triangle bitstring over all vertex
/// relabelings. Only for n <= 8.
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;  // x(0,1) is the most significant used bit

    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph graph_from_canonical(const CanonicalForm& cf);
std::string canonical_graph6(const Graph& g);

/// Cache/dedup key: canonical graph6 when n <= 8, the raw encoding otherwise.
std::string graph_key(const Graph& g);

// One representative per isomorphism class of connected graphs on n
// vertices, in canonical-form order. Supported for 2 <= n <= 6.
std::vector<Graph> enumerate_connected_graphs(int n);

// ---- family constructors -------------------------------------------------
// Vertex numbering is deterministic and documented per constructor.

Graph path(int n);                    // 0-1-2-...-(n-1)
Graph cycle(int n);                   // n >= 3, 0-1-...-(n-1)-0
Graph star(int n);                    // K_{1,n-1}; center 0
Graph complete(int n);
Graph complete_bipartite(int s, int t);        // parts {0..s-1}, {s..s+t-1}
Graph complete_multipartite(const std::vector<int>& parts);  // consecutive blocks
Graph wheel(int r);                   // order r+1: hub 0 joined to rim cycle 1..r
// p cycles of length q sharing the center vertex 0; petal i occupies
// vertices 1+i(q-1) .. (i+1)(q-1) in cycle order.
Graph rose(int p, int q);
// p disjoint K_4's (clique i = vertices 4i..4i+3) plus a complete graph on
// the designated vertices {0, 4, 8, ...}.
Graph clique_chain(int p);
// Path a,b,c,d = vertices 0..3 plus H = vertices 4..n-1 with a and d joined
// to every vertex of H. H is edgeless unless edges (indexed within H) are given.
Graph example1_graph(int n, const std::vector<std::pair<int, int>>& h_edges = {});
// Rose-with-tail construction: center w0 = 0; petal i has outer vertices
// 2i-1, 2i; the path w1, w2, ... follows. If n-l is odd the rose has
// (n-l-1)/2 petals and the tail is w1..w_l; if n-l is even it has (n-l)/2
// petals and the tail is w1..w_{l-1}.
Graph theorem3_graph(int n, int l);
int theorem3_petals(int n, int l);

/// Dispatch by name for CLI specs like "rose:2,3". example1 only takes the
/// order (H stays edgeless).
Graph make_family(const std::string& name, const std::vector<int>& params);

/// Parse "name" or "name:p1,p2,...".
Graph make_family_spec(const std::string& spec);

Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace rvx
