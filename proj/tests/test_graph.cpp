#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rvx/graph.hpp"

using namespace rvx;

namespace {

bool same_graph(const Graph& a, const Graph& b) { return a == b; }

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Independent class counter: dedupe labeled connected graphs by the maximum
// row-major adjacency bitstring over all permutations (a different canonical
// map than the library's min column-major form).
int count_classes_by_other_canonical(int n) {
    int m = n * (n - 1) / 2;
    std::set<std::uint64_t> classes;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Graph g(n);
        int idx = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++idx)
                if ((mask >> idx) & 1) g.add_edge(u, v);
        if (!is_connected(g)) continue;
        std::uint64_t best = 0;
        std::vector<int> perm = base;
        do {
            std::uint64_t bits = 0;
            int pos = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++pos)
                    if (g.has_edge(perm[u], perm[v])) bits |= std::uint64_t{1} << pos;
            best = std::max(best, bits);
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
    }
    return static_cast<int>(classes.size());
}

std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> cuts;
    for (int v = 0; v < g.order(); ++v) {
        Bits rest = g.vertex_mask() & ~bit(v);
        if (reach(g, lowest_bit(rest), rest) != rest) cuts.push_back(v);
    }
    return cuts;
}

}  // namespace

TEST_CASE("graph6 parse examples") {
    Graph k4 = parse_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(same_graph(k4, complete(4)));

    Graph two = parse_graph6("A?");
    CHECK(two.order() == 2);
    CHECK(two.edge_count() == 0);

    Graph k3 = parse_graph6("Bw");
    CHECK(same_graph(k3, complete(3)));
    CHECK(write_graph6(k3) == "Bw");
}

TEST_CASE("graph6 write examples") {
    CHECK(write_graph6(complete(4)) == "C~");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(path(3)) == "Bg");  // x(0,1)=1, x(0,2)=0, x(1,2)=1
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("?"), std::invalid_argument);        // n = 0
    CHECK_THROWS_AS(parse_graph6("\x7f~"), std::invalid_argument);    // n > 62
    CHECK_THROWS_AS(parse_graph6("C~~"), std::invalid_argument);      // trailing payload
    CHECK_THROWS_AS(parse_graph6("C"), std::invalid_argument);        // missing payload
    CHECK_THROWS_AS(parse_graph6("A~"), std::invalid_argument);       // nonzero padding
}

TEST_CASE("edge list parsing") {
    CHECK(same_graph(parse_edge_list("4\n0 1\n1 2\n2 3"), path(4)));
    CHECK(same_graph(parse_edge_list("2\n0 1"), complete(2)));
    Graph dup = parse_edge_list("3\n0 1\n1 0");
    CHECK(dup.edge_count() == 1);
    CHECK(dup.order() == 3);

    CHECK_THROWS_AS(parse_edge_list("3\n1 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3\n0 5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3\n0 x"), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement(complete(4)).edge_count() == 0);
    CHECK(canonical_form(complement(path(4))) == canonical_form(path(4)));
    CHECK(canonical_form(complement(cycle(5))) == canonical_form(cycle(5)));
    CHECK_FALSE(is_connected(complement(star(5))));
}

TEST_CASE("basic quantities") {
    CHECK(is_connected(path(4)));
    CHECK(min_degree(path(4)) == 1);
    CHECK(path(4).edge_count() == 3);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(complement(cycle(5)).edge_count() == 5);
}

TEST_CASE("complement involution and edge count split") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            CHECK(same_graph(complement(complement(g)), g));
            CHECK(g.edge_count() + complement(g).edge_count() == n * (n - 1) / 2);
        }
}

TEST_CASE("canonical form is permutation invariant") {
    std::mt19937_64 rng(42);
    for (const Graph& g : {path(4), cycle(5), star(6), wheel(4), complete_bipartite(2, 3)}) {
        CanonicalForm cf = canonical_form(g);
        for (int trial = 0; trial < 100; ++trial)
            CHECK(canonical_form(relabel(g, random_perm(g.order(), rng))) == cf);
    }
    CHECK(canonical_form(complete(3)) != canonical_form(path(3)));
}

TEST_CASE("canonical form guard") {
    CHECK_THROWS_AS(canonical_form(path(9)), std::invalid_argument);
}

TEST_CASE("enumeration counts and distinctness") {
    const int expected[] = {0, 0, 1, 2, 6, 21, 112};
    for (int n = 2; n <= 6; ++n) {
        auto graphs = enumerate_connected_graphs(n);
        CHECK(static_cast<int>(graphs.size()) == expected[n]);
        std::set<CanonicalForm> forms;
        CanonicalForm prev{};
        for (const Graph& g : graphs) {
            CHECK(is_connected(g));
            CanonicalForm cf = canonical_form(g);
            forms.insert(cf);
            CHECK(prev < cf);  // canonical-form order, strictly increasing
            prev = cf;
        }
        CHECK(forms.size() == graphs.size());
    }
    CHECK_THROWS_AS(enumerate_connected_graphs(7), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_connected_graphs(1), std::invalid_argument);
}

TEST_CASE("enumeration counts agree with an independent canonical map") {
    for (int n = 2; n <= 5; ++n)
        CHECK(count_classes_by_other_canonical(n) ==
              static_cast<int>(enumerate_connected_graphs(n).size()));
}

TEST_CASE("graph6 round trip over all enumerated graphs") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_connected_graphs(n))
            CHECK(same_graph(parse_graph6(write_graph6(g)), g));
}

TEST_CASE("family constructors") {
    Graph r23 = rose(2, 3);
    CHECK(r23.order() == 5);
    CHECK(r23.edge_count() == 6);
    CHECK(r23.degree(0) == 4);

    Graph cc3 = clique_chain(3);
    CHECK(cc3.order() == 12);
    CHECK(cut_vertices(cc3) == std::vector<int>{0, 4, 8});

    Graph w4 = wheel(4);
    CHECK(w4.order() == 5);
    CHECK(w4.degree(0) == 4);
    CHECK(min_degree(w4) == 3);

    Graph km = complete_multipartite({1, 2, 3});
    CHECK(km.order() == 6);
    CHECK(km.edge_count() == 2 + 3 + 6);

    Graph ex1 = example1_graph(6);
    CHECK(ex1.order() == 6);
    CHECK(ex1.edge_count() == 7);
    CHECK(is_connected(ex1));
    CHECK(is_connected(complement(ex1)));
    CHECK(canonical_form(example1_graph(5)) == canonical_form(cycle(5)));  // H is one vertex
    Graph ex1h = example1_graph(6, {{0, 1}});
    CHECK(ex1h.edge_count() == 8);
}

TEST_CASE("theorem3 graph shape") {
    Graph g92 = theorem3_graph(9, 2);
    CHECK(g92.order() == 9);
    CHECK(theorem3_petals(9, 2) == 3);  // n-l-1 = 6 even -> R_{3,3} with P_3 tail
    CHECK(g92.edge_count() == 9 - 1 + (9 - 2 - 1) / 2);

    CHECK(theorem3_graph(8, 3).edge_count() == 9);   // n-l odd
    CHECK(theorem3_graph(8, 2).edge_count() == 10);  // n-l even

    for (int n = 5; n <= 12; ++n)
        for (int l = 2; l <= n - 3; ++l) {
            Graph g = theorem3_graph(n, l);
            CHECK(g.order() == n);
            CHECK(is_connected(g));
        }
    CHECK_THROWS_AS(theorem3_graph(6, 4), std::invalid_argument);
}

TEST_CASE("family dispatch") {
    CHECK(same_graph(make_family_spec("rose:2,3"), rose(2, 3)));
    CHECK(same_graph(make_family_spec("path:5"), path(5)));
    CHECK(same_graph(make_family_spec("complete_multipartite:2,2,3"),
                     complete_multipartite({2, 2, 3})));
    CHECK_THROWS_AS(make_family_spec("frob:3"), std::invalid_argument);
    CHECK_THROWS_AS(make_family_spec("rose:2"), std::invalid_argument);
    CHECK_THROWS_AS(make_family_spec("rose:2,x"), std::invalid_argument);
    CHECK_THROWS_AS(make_family_spec("rose:1,2"), std::invalid_argument);
}
