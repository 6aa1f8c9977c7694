#include "rvx/rainbow.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "rvx/steiner.hpp"

namespace rvx {

VertexColoring VertexColoring::parse(const std::string& csv) {
    VertexColoring c;
    std::istringstream in(csv);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
            c.colors.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("coloring: bad color token '" + tok + "'");
        }
    }
    if (c.colors.empty()) throw std::invalid_argument("coloring: empty");
    c.num_colors = *std::max_element(c.colors.begin(), c.colors.end()) + 1;
    return c;
}

std::string VertexColoring::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (i) out << ",";
        out << colors[i];
    }
    return out.str();
}

void validate_coloring(const Graph& g, const VertexColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.order())
        throw std::invalid_argument("coloring length " + std::to_string(c.colors.size()) +
                                    " != graph order " + std::to_string(g.order()));
    if (c.num_colors > 0)
        for (int col : c.colors)
            if (col < 0 || col >= c.num_colors)
                throw std::invalid_argument("coloring: color id out of range");
}

namespace {

bool induced_connected(const Graph& g, Bits verts) {
    if (!verts) return false;
    return reach(g, lowest_bit(verts), verts) == verts;
}

WitnessTree spanning_tree_of(const Graph& g, Bits verts, Bits s) {
    WitnessTree t;
    t.internal = verts & ~s;
    Bits seen = bit(lowest_bit(verts));
    Bits frontier = seen;
    while (frontier) {
        Bits next = 0;
        for (Bits f = frontier; f; f &= f - 1) {
            int v = lowest_bit(f);
            for (Bits nb = g.neighbors(v) & verts & ~seen & ~next; nb; nb &= nb - 1) {
                int u = lowest_bit(nb);
                t.edges.push_back({v, u});
                next |= bit(u);
            }
        }
        seen |= next;
        frontier = next;
    }
    return t;
}

// Calls fn(W) for subsets of `universe` by ascending size then lex order of
// the sorted vertex lists, sizes 0..max_size. fn returning true stops.
template <typename Fn>
bool scan_internal_sets(Bits universe, int max_size, Fn&& fn) {
    std::vector<int> verts = bits_to_list(universe);
    int m = static_cast<int>(verts.size());
    max_size = std::min(max_size, m);
    for (int sz = 0; sz <= max_size; ++sz) {
        bool hit = false;
        for_each_subset_lex(m, sz, [&](Bits idxmask) {
            Bits w = 0;
            for (Bits im = idxmask; im; im &= im - 1) w |= bit(verts[lowest_bit(im)]);
            if (fn(w)) {
                hit = true;
                return false;
            }
            return true;
        });
        if (hit) return true;
    }
    return false;
}

bool rainbow_internal_set(const Graph& g, const VertexColoring& c, Bits s, Bits* found) {
    Bits rest = g.vertex_mask() & ~s;
    return scan_internal_sets(rest, c.num_colors, [&](Bits w) {
        Bits seen_colors = 0;
        for (Bits wm = w; wm; wm &= wm - 1) {
            Bits cb = bit(c.colors[lowest_bit(wm)]);
            if (seen_colors & cb) return false;
            seen_colors |= cb;
        }
        if (!induced_connected(g, s | w)) return false;
        if (found) *found = w;
        return true;
    });
}

}  // namespace

std::optional<WitnessTree> exists_rainbow_tree(const Graph& g, const VertexColoring& c, Bits s) {
    validate_coloring(g, c);
    if (s & ~g.vertex_mask()) throw std::invalid_argument("terminal set out of range");
    if (popcount(s) < 2) throw std::invalid_argument("terminal set needs >= 2 vertices");
    Bits w = 0;
    if (!rainbow_internal_set(g, c, s, &w)) return std::nullopt;
    return spanning_tree_of(g, s | w, s);
}

std::optional<Bits> first_failing_subset(const Graph& g, const VertexColoring& c, int k) {
    validate_coloring(g, c);
    if (k < 2 || k > g.order()) throw std::invalid_argument("k out of range");
    std::optional<Bits> failing;
    for_each_subset_lex(g.order(), k, [&](Bits s) {
        if (!rainbow_internal_set(g, c, s, nullptr)) {
            failing = s;
            return false;
        }
        return true;
    });
    return failing;
}

int rvx_lower_bound(const Graph& g, int k) {
    return sdiam(g, k) == k - 1 ? 0 : 1;
}

VertexColoring rvx_upper_bound_coloring(const Graph& g, int k) {
    int n = g.order();
    if (!is_connected(g)) throw std::invalid_argument("rvx_upper_bound_coloring: graph disconnected");
    (void)k;
    // BFS tree from vertex 0
    std::vector<int> tree_deg(n, 0);
    std::vector<int> parent(n, -1);
    Bits seen = bit(0);
    Bits frontier = seen;
    while (frontier) {
        Bits next = 0;
        for (Bits f = frontier; f; f &= f - 1) {
            int v = lowest_bit(f);
            for (Bits nb = g.neighbors(v) & ~seen & ~next; nb; nb &= nb - 1) {
                int u = lowest_bit(nb);
                parent[u] = v;
                ++tree_deg[u];
                ++tree_deg[v];
                next |= bit(u);
            }
        }
        seen |= next;
        frontier = next;
    }
    VertexColoring c;
    c.colors.assign(n, 0);
    int next_color = 0;
    for (int v = 0; v < n; ++v)
        if (tree_deg[v] >= 2) c.colors[v] = next_color++;
    c.num_colors = std::max(next_color, 1);
    return c;
}

namespace {

// Restricted-growth strings of length n using exactly num_colors colors.
// fn returns true to stop (accepting coloring found).
bool for_each_rgs(int n, int num_colors, std::vector<int>& a, int pos, int used,
                  const std::function<bool(const std::vector<int>&)>& fn) {
    if (used + (n - pos) < num_colors) return false;  // cannot reach the target count
    if (pos == n) return used == num_colors && fn(a);
    int top = std::min(used, num_colors - 1);
    for (int col = 0; col <= top; ++col) {
        a[pos] = col;
        if (for_each_rgs(n, num_colors, a, pos + 1, std::max(used, col + 1), fn)) return true;
    }
    return false;
}

}  // namespace

RvxResult rvx(const Graph& g, int k, std::optional<int> max_colors, bool want_certificates) {
    int n = g.order();
    if (!is_connected(g)) throw std::invalid_argument("rvx: graph disconnected");
    if (k < 2 || k > n) throw std::invalid_argument("rvx: k out of range");

    // Hard subsets first: descending Steiner distance, ties in lex order.
    std::vector<std::pair<int, Bits>> ordered;
    for_each_subset_lex(n, k, [&](Bits s) {
        ordered.push_back({steiner_distance(g, s), s});
        return true;
    });
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    RvxResult res;
    res.k = k;
    res.max_colors = max_colors.value_or(-1);

    int cap = max_colors.value_or(n);
    for (int colors = 0; colors <= cap; ++colors) {
        auto try_coloring = [&](const VertexColoring& c) {
            ++res.stats.colorings_examined;
            for (const auto& [dist, s] : ordered) {
                ++res.stats.subsets_checked;
                if (!rainbow_internal_set(g, c, s, nullptr)) return false;
            }
            return true;
        };
        std::optional<VertexColoring> accepting;
        if (colors == 0) {
            VertexColoring c = VertexColoring::empty_palette(n);
            if (try_coloring(c)) accepting = c;
        } else {
            std::vector<int> a(n, 0);
            for_each_rgs(n, colors, a, 0, 0, [&](const std::vector<int>& rgs) {
                VertexColoring c{rgs, colors};
                if (!try_coloring(c)) return false;
                accepting = c;
                return true;
            });
        }
        if (accepting) {
            res.value = colors;
            res.witness = *accepting;
            if (want_certificates) {
                for_each_subset_lex(n, k, [&](Bits s) {
                    res.certificates[s] = *exists_rainbow_tree(g, *accepting, s);
                    return true;
                });
            }
            return res;
        }
    }
    if (!max_colors)
        throw std::logic_error("rvx: no coloring found up to n colors");  // unreachable for connected G
    res.exceeded = true;
    return res;
}

namespace {

// Does some vertex superset of s induce a connected subgraph whose vertices
// off s have pairwise-distinct colors? Scans all supersets within 2^n.
bool subset_ok_by_enumeration(const Graph& g, const std::vector<int>& colors, int num_colors,
                              Bits s) {
    Bits all = g.vertex_mask();
    for (Bits u = s;; u = (u + 1) | s) {
        bool distinct = true;
        Bits seen_colors = 0;
        for (Bits wm = u & ~s; wm; wm &= wm - 1) {
            int v = lowest_bit(wm);
            if (num_colors == 0) { distinct = false; break; }
            Bits cb = bit(colors[v]);
            if (seen_colors & cb) { distinct = false; break; }
            seen_colors |= cb;
        }
        if (distinct && induced_connected(g, u)) return true;
        if (u == all) return false;
    }
}

}  // namespace

int brute_force_rvx(const Graph& g, int k) {
    int n = g.order();
    if (n > 7) throw std::invalid_argument("brute_force_rvx: n > 7 not supported");
    if (!is_connected(g)) throw std::invalid_argument("brute_force_rvx: graph disconnected");
    if (k < 2 || k > n) throw std::invalid_argument("brute_force_rvx: k out of range");

    for (int num_colors = 0; num_colors <= n; ++num_colors) {
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= std::max(num_colors, 1);
        for (long long code = 0; code < total; ++code) {
            std::vector<int> colors(n, 0);
            long long c = code;
            if (num_colors > 0)
                for (int i = 0; i < n; ++i) {
                    colors[i] = static_cast<int>(c % num_colors);
                    c /= num_colors;
                }
            bool ok = true;
            for_each_subset_lex(n, k, [&](Bits s) {
                if (!subset_ok_by_enumeration(g, colors, num_colors, s)) {
                    ok = false;
                    return false;
                }
                return true;
            });
            if (ok) return num_colors;
        }
    }
    throw std::logic_error("brute_force_rvx: no coloring found");  // unreachable
}

}  // namespace rvx
