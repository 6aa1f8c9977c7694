#include "rvx/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rvx {

std::vector<int> bits_to_list(Bits b) {
    std::vector<int> out;
    while (b) {
        int v = lowest_bit(b);
        out.push_back(v);
        b &= b - 1;
    }
    return out;
}

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in 1..62, got " + std::to_string(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex index out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
}

// graph6, single-byte size form: byte0 = n+63; then the upper-triangle bits
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
// each group + 63, final group zero-padded.

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    int n = static_cast<int>(static_cast<unsigned char>(text[0])) - 63;
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph6: order byte out of range (n=" + std::to_string(n) + ")");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(text.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6: payload length " +
                                    std::to_string(text.size() - 1) + ", expected " +
                                    std::to_string(nbytes));
    Graph g(n);
    int idx = 0;
    for (int byte = 0; byte < nbytes; ++byte) {
        int c = static_cast<unsigned char>(text[1 + byte]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: payload byte out of range");
        int group = c - 63;
        for (int b = 5; b >= 0; --b, ++idx) {
            int value = (group >> b) & 1;
            if (idx >= nbits) {
                if (value) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (value) {
                // idx is the column-major upper-triangle position
                int v = 1;
                int rem = idx;
                while (rem >= v) { rem -= v; ++v; }
                g.add_edge(rem, v);
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int nbits = n * (n - 1) / 2;
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    (void)nbits;
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    int lineno = 0;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n) || n < 1 || n > kMaxVertices)
                throw std::invalid_argument("edge list line 1: bad order");
            std::string extra;
            if (ls >> extra) throw std::invalid_argument("edge list line 1: trailing token '" + extra + "'");
            g.emplace(n);
            continue;
        }
        int u, v;
        if (!(ls >> u)) {
            std::string tok;
            std::istringstream probe(line);
            if (probe >> tok)
                throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                            ": unparsable token '" + tok + "'");
            continue;  // blank line
        }
        if (!(ls >> v))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": missing endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": index out of range");
        if (u == v)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": self-loop");
        g->add_edge(u, v);
    }
    if (!g) throw std::invalid_argument("edge list: empty input");
    return *g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) out << u << " " << v << "\n";
    return out.str();
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

Bits reach(const Graph& g, int start, Bits allowed) {
    Bits seen = bit(start) & allowed;
    if (!seen) return 0;
    Bits frontier = seen;
    while (frontier) {
        Bits next = 0;
        for (Bits f = frontier; f; f &= f - 1)
            next |= g.neighbors(lowest_bit(f));
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

bool is_connected(const Graph& g) {
    return reach(g, 0, g.vertex_mask()) == g.vertex_mask();
}

int min_degree(const Graph& g) {
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

namespace {

// Upper-triangle bit packing with x(0,1) most significant, matching the
// graph6 bit order so canonical forms sort the same way as their encodings.
std::uint64_t triangle_bits(const Graph& g, const std::vector<int>& perm) {
    int n = g.order();
    int m = n * (n - 1) / 2;
    std::uint64_t bits = 0;
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if (g.has_edge(perm[u], perm[v])) bits |= std::uint64_t{1} << (m - 1 - idx);
    return bits;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    int n = g.order();
    if (n > 8) throw std::invalid_argument("canonical_form: n > 8 not supported");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, triangle_bits(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return CanonicalForm{n, best};
}

Graph graph_from_canonical(const CanonicalForm& cf) {
    Graph g(cf.n);
    int m = cf.n * (cf.n - 1) / 2;
    int idx = 0;
    for (int v = 1; v < cf.n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
            if ((cf.bits >> (m - 1 - idx)) & 1) g.add_edge(u, v);
    return g;
}

std::string canonical_graph6(const Graph& g) {
    return write_graph6(graph_from_canonical(canonical_form(g)));
}

std::string graph_key(const Graph& g) {
    return g.order() <= 8 ? canonical_graph6(g) : write_graph6(g);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 2 || n > 6)
        throw std::invalid_argument("enumerate_connected_graphs: n must be in 2..6");
    int m = n * (n - 1) / 2;
    std::map<CanonicalForm, Graph> classes;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Graph g(n);
        int idx = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++idx)
                if ((mask >> idx) & 1) g.add_edge(u, v);
        if (!is_connected(g)) continue;
        CanonicalForm cf = canonical_form(g);
        classes.try_emplace(cf, graph_from_canonical(cf));
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [cf, g] : classes) out.push_back(std::move(g));
    return out;
}

// ---- families ------------------------------------------------------------

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star(int n) {
    if (n < 2) throw std::invalid_argument("star: n >= 2 required");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int s, int t) {
    return complete_multipartite({s, t});
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("complete_multipartite: need >= 2 parts");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("complete_multipartite: part size >= 1 required");
        n += p;
    }
    Graph g(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of[v++] = static_cast<int>(i);
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
            if (part_of[a] != part_of[b]) g.add_edge(a, b);
    return g;
}

Graph wheel(int r) {
    if (r < 3) throw std::invalid_argument("wheel: rim size >= 3 required");
    Graph g(r + 1);
    for (int v = 1; v <= r; ++v) {
        g.add_edge(0, v);
        g.add_edge(v, v == r ? 1 : v + 1);
    }
    return g;
}

Graph rose(int p, int q) {
    if (p < 1 || q < 3) throw std::invalid_argument("rose: need p >= 1, q >= 3");
    Graph g(1 + p * (q - 1));
    for (int i = 0; i < p; ++i) {
        int base = 1 + i * (q - 1);
        g.add_edge(0, base);
        for (int j = 0; j + 1 < q - 1; ++j) g.add_edge(base + j, base + j + 1);
        g.add_edge(base + q - 2, 0);
    }
    return g;
}

Graph clique_chain(int p) {
    if (p < 1 || 4 * p > kMaxVertices) throw std::invalid_argument("clique_chain: bad p");
    Graph g(4 * p);
    for (int i = 0; i < p; ++i)
        for (int b = 1; b < 4; ++b)
            for (int a = 0; a < b; ++a) g.add_edge(4 * i + a, 4 * i + b);
    for (int j = 1; j < p; ++j)
        for (int i = 0; i < j; ++i) g.add_edge(4 * i, 4 * j);
    return g;
}

Graph example1_graph(int n, const std::vector<std::pair<int, int>>& h_edges) {
    if (n < 5) throw std::invalid_argument("example1_graph: n >= 5 required");
    Graph g(n);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    for (int h = 4; h < n; ++h) {
        g.add_edge(0, h);
        g.add_edge(3, h);
    }
    for (auto [a, b] : h_edges) {
        if (a < 0 || b < 0 || a >= n - 4 || b >= n - 4)
            throw std::invalid_argument("example1_graph: H edge out of range");
        g.add_edge(4 + a, 4 + b);
    }
    return g;
}

int theorem3_petals(int n, int l) {
    return (n - l) % 2 != 0 ? (n - l - 1) / 2 : (n - l) / 2;
}

Graph theorem3_graph(int n, int l) {
    if (l < 2 || l > n - 3) throw std::invalid_argument("theorem3_graph: need 2 <= l <= n-3");
    int p = theorem3_petals(n, l);
    int tail = (n - l) % 2 != 0 ? l : l - 1;  // path vertices after the center
    Graph g(n);
    for (int i = 0; i < p; ++i) {
        g.add_edge(0, 2 * i + 1);
        g.add_edge(2 * i + 1, 2 * i + 2);
        g.add_edge(2 * i + 2, 0);
    }
    int prev = 0;
    for (int j = 1; j <= tail; ++j) {
        g.add_edge(prev, 2 * p + j);
        prev = 2 * p + j;
    }
    return g;
}

Graph make_family(const std::string& name, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family " + name + ": expected " + std::to_string(k) +
                                        " parameter(s), got " + std::to_string(params.size()));
    };
    if (name == "path") { need(1); return path(params[0]); }
    if (name == "cycle") { need(1); return cycle(params[0]); }
    if (name == "star") { need(1); return star(params[0]); }
    if (name == "complete") { need(1); return complete(params[0]); }
    if (name == "complete_bipartite") { need(2); return complete_bipartite(params[0], params[1]); }
    if (name == "complete_multipartite") return complete_multipartite(params);
    if (name == "wheel") { need(1); return wheel(params[0]); }
    if (name == "rose") { need(2); return rose(params[0], params[1]); }
    if (name == "clique_chain") { need(1); return clique_chain(params[0]); }
    if (name == "example1") { need(1); return example1_graph(params[0]); }
    if (name == "theorem3") { need(2); return theorem3_graph(params[0], params[1]); }
    throw std::invalid_argument("unknown family '" + name + "'");
}

Graph make_family_spec(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<int> params;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::istringstream in(rest);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                params.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("family spec: bad parameter '" + tok + "'");
            }
        }
    }
    return make_family(name, params);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

}  // namespace rvx
