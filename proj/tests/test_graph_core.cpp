#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "domviz/corpus.hpp"
#include "domviz/families.hpp"
#include "domviz/graph.hpp"
#include "domviz/graph6.hpp"
#include "domviz/product.hpp"
#include "domviz/vertex_set.hpp"

using namespace domviz;

namespace {

// Independent graph6 encoder, written straight from the format description:
// header = n + 63 (short form), body = upper-triangle bits (0,1),(0,2),(1,2),
// (0,3)... packed 6 per character, MSB first, +63. Exists so write_graph6 is
// checked against a second derivation, not against itself.
std::string reference_graph6(const Graph& g) {
    const int n = g.order();
    REQUIRE(n <= 62);  // short header only; enough for every test corpus
    std::string out(1, static_cast<char>(n + 63));
    int bits = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(bits + 63);
                bits = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((bits << (6 - filled)) + 63);
    return out;
}

Graph random_with(int n, double p, std::uint64_t seed) { return random_graph(n, p, seed); }

}  // namespace

TEST_CASE("VertexSet basics") {
    VertexSet s(10);
    CHECK(s.universe() == 10);
    CHECK(s.empty());
    s.add(3);
    s.add(7);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK(s.count() == 2);
    s.remove(3);
    CHECK_FALSE(s.contains(3));
    CHECK(s.count() == 1);

    CHECK_THROWS_AS(s.add(10), std::out_of_range);
    CHECK_THROWS_AS(s.add(-1), std::out_of_range);
    CHECK_THROWS_AS(s.contains(12), std::out_of_range);
    CHECK_THROWS_AS(VertexSet(-3), std::invalid_argument);
}

TEST_CASE("VertexSet algebra and iteration") {
    const VertexSet a = make_set(8, {0, 2, 5});
    const VertexSet b = make_set(8, {2, 3});
    CHECK((a | b) == make_set(8, {0, 2, 3, 5}));
    CHECK((a & b) == make_set(8, {2}));
    CHECK((a - b) == make_set(8, {0, 5}));
    CHECK(a.complement() == make_set(8, {1, 3, 4, 6, 7}));
    CHECK(a.count_minus(b) == 2);
    CHECK(make_set(8, {2}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(make_set(8, {1, 4})));

    CHECK(a.first() == 0);
    CHECK(a.next_after(0) == 2);
    CHECK(a.next_after(5) == -1);
    CHECK(a.to_vector() == std::vector<int>{0, 2, 5});
    std::vector<int> seen;
    for (int v : a) seen.push_back(v);
    CHECK(seen == std::vector<int>{0, 2, 5});

    CHECK(VertexSet::full(70).count() == 70);
    CHECK(VertexSet::full(70).complement().empty());
    CHECK_THROWS_AS((void)(a | make_set(9, {})), std::invalid_argument);
}

TEST_CASE("VertexSet crosses word boundaries cleanly") {
    VertexSet s(130);
    for (int v : {0, 63, 64, 127, 128, 129}) s.add(v);
    CHECK(s.count() == 6);
    CHECK(s.to_vector() == std::vector<int>{0, 63, 64, 127, 128, 129});
    CHECK(s.complement().count() == 124);
    CHECK(s.next_after(64) == 127);
}

TEST_CASE("graph construction") {
    const Graph k2(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.neighbors(0) == make_set(2, {1}));
    CHECK(k2.neighbors(1) == make_set(2, {0}));

    const Graph e3(3, {});
    CHECK(e3.edge_count() == 0);
    for (int v = 0; v < 3; ++v) CHECK(e3.neighbors(v).empty());

    const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
    CHECK(c4.adjacent(0, 1));
    CHECK(c4.adjacent(1, 0));
    CHECK_FALSE(c4.adjacent(0, 2));

    // Duplicate pairs collapse; both orientations name the same edge.
    const Graph dup(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    CHECK(dup.edge_count() == 2);
    CHECK(dup.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("neighborhoods of sets") {
    const Graph c4 = cycle_graph(4);
    CHECK(closed_neighborhood(c4, make_set(4, {0})) == make_set(4, {0, 1, 3}));
    CHECK(closed_neighborhood(c4, VertexSet(4)).empty());
    CHECK(open_neighborhood(c4, VertexSet(4)).empty());

    const Graph p4 = path_graph(4);
    CHECK(closed_neighborhood(p4, make_set(4, {1, 2})) == VertexSet::full(4));
    CHECK(open_neighborhood(p4, make_set(4, {0})) == make_set(4, {1}));

    // N[S] = N(S) ∪ S and S ⊆ N[S] on random instances.
    std::mt19937_64 rng(7);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_with(9, 0.3, rng());
        VertexSet s(9);
        for (int v = 0; v < 9; ++v)
            if (rng() & 1) s.add(v);
        const VertexSet open = open_neighborhood(g, s);
        const VertexSet closed = closed_neighborhood(g, s);
        CHECK(closed == (open | s));
        CHECK(s.is_subset_of(closed));
    }
}

TEST_CASE("domination predicate") {
    const Graph c4 = cycle_graph(4);
    CHECK(is_dominating(c4, make_set(4, {0, 2})));
    CHECK_FALSE(is_dominating(c4, make_set(4, {0})));
    CHECK_FALSE(is_dominating(empty_graph(3), make_set(3, {0, 1})));
    CHECK(is_dominating(empty_graph(3), VertexSet::full(3)));

    // Definitional equivalence |N[S]| = n, random instances.
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_with(8, 0.25, rng());
        VertexSet s(8);
        for (int v = 0; v < 8; ++v)
            if (rng() % 3 == 0) s.add(v);
        CHECK(is_dominating(g, s) == (closed_neighborhood(g, s).count() == 8));
    }
}

TEST_CASE("induced subgraphs") {
    const Graph c4 = cycle_graph(4);
    const InducedSubgraph p3 = induced_subgraph(c4, make_set(4, {0, 1, 2}));
    CHECK(p3.graph.order() == 3);
    CHECK(p3.graph.edge_count() == 2);
    CHECK(p3.graph.adjacent(0, 1));
    CHECK(p3.graph.adjacent(1, 2));
    CHECK_FALSE(p3.graph.adjacent(0, 2));
    CHECK(p3.new_to_old == std::vector<int>{0, 1, 2});
    CHECK(p3.old_to_new == std::vector<int>{0, 1, 2, -1});

    const InducedSubgraph whole = induced_subgraph(c4, VertexSet::full(4));
    CHECK(whole.graph == c4);

    const InducedSubgraph ends = induced_subgraph(path_graph(4), make_set(4, {0, 3}));
    CHECK(ends.graph.order() == 2);
    CHECK(ends.graph.edge_count() == 0);

    CHECK_THROWS_AS(induced_subgraph(c4, VertexSet(4)), std::invalid_argument);
    const InducedSubgraph none = induced_subgraph(c4, VertexSet(4), AllowEmpty::yes);
    CHECK(none.graph.order() == 0);
    CHECK(none.old_to_new == std::vector<int>{-1, -1, -1, -1});
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path_graph(6)));
    CHECK(is_connected(complete_graph(1)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_connected(two_triangles));
}

TEST_CASE("cartesian product: K_2 box K_2 is C_4") {
    const LabeledProduct p = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(p.product.order() == 4);
    CHECK(p.product.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(p.product.degree(v) == 2);
    // Row-major ids: (u,v) -> 2u + v. Edges within a row/column only.
    CHECK(p.encode(0, 0) == 0);
    CHECK(p.encode(1, 1) == 3);
    CHECK(p.product.adjacent(p.encode(0, 0), p.encode(0, 1)));
    CHECK(p.product.adjacent(p.encode(0, 0), p.encode(1, 0)));
    CHECK_FALSE(p.product.adjacent(p.encode(0, 0), p.encode(1, 1)));
}

TEST_CASE("cartesian product: identity factor and edge counts") {
    const Graph c5 = cycle_graph(5);
    const LabeledProduct id = cartesian_product(complete_graph(1), c5);
    CHECK(id.product.order() == 5);
    CHECK(id.product.edge_count() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(id.product.neighbors(id.encode(0, v)).count() == c5.neighbors(v).count());

    const LabeledProduct p33 = cartesian_product(path_graph(3), path_graph(3));
    CHECK(p33.product.order() == 9);
    CHECK(p33.product.edge_count() == 12);

    // |E(GxH)| = |V(G)||E(H)| + |V(H)||E(G)| and the degree identity.
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        const Graph g = random_with(5, 0.4, rng());
        const Graph h = random_with(4, 0.5, rng());
        const LabeledProduct p = cartesian_product(g, h);
        CHECK(p.product.edge_count() ==
              g.order() * h.edge_count() + h.order() * g.edge_count());
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < h.order(); ++v)
                CHECK(p.product.degree(p.encode(u, v)) == g.degree(u) + h.degree(v));
    }
}

TEST_CASE("cartesian product: encode/decode bijection and adjacency rule") {
    const Graph g = path_graph(3);
    const Graph h = cycle_graph(4);
    const LabeledProduct p = cartesian_product(g, h);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 4; ++v) {
            const int id = p.encode(u, v);
            CHECK(id == u * 4 + v);
            CHECK(p.decode(id) == std::pair<int, int>{u, v});
        }
    // (u,v) ~ (u',v') iff equal in one coordinate, adjacent in the other.
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) {
            const auto [u1, v1] = p.decode(a);
            const auto [u2, v2] = p.decode(b);
            const bool expected = (u1 == u2 && h.adjacent(v1, v2)) ||
                                  (v1 == v2 && g.adjacent(u1, u2));
            CHECK(p.product.adjacent(a, b) == (a != b && expected));
        }
    CHECK_THROWS_AS(p.encode(3, 0), std::out_of_range);
    CHECK_THROWS_AS(p.decode(12), std::out_of_range);
}

TEST_CASE("cartesian product: order cap") {
    CHECK_THROWS_AS(cartesian_product(complete_graph(70), complete_graph(70)),
                    InstanceTooLarge);
    CHECK_THROWS_AS(cartesian_product(path_graph(3), path_graph(3), 8), InstanceTooLarge);
    CHECK_NOTHROW(cartesian_product(path_graph(3), path_graph(3), 9));
}

TEST_CASE("graph6 hand-checked values") {
    const Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));
    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK(write_graph6(complete_graph(2)) == "A_");
    CHECK(parse_graph6("A?").edge_count() == 0);

    const Graph c5 = cycle_graph(5);
    CHECK(parse_graph6(write_graph6(c5)) == c5);
}

TEST_CASE("graph6 round-trips the whole small corpus, against a reference encoder") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n, false)) {
            const std::string mine = write_graph6(g);
            CHECK(mine == reference_graph6(g));
            CHECK(parse_graph6(mine) == g);
        }
    std::mt19937_64 rng(31);
    for (int t = 0; t < 20; ++t) {
        const Graph g = random_with(17, 0.3, rng());
        CHECK(write_graph6(g) == reference_graph6(g));
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
}

TEST_CASE("graph6 long-form headers") {
    const Graph g = random_with(70, 0.1, 5);  // needs the '~' + 3 char header
    const std::string line = write_graph6(g);
    CHECK(line[0] == '~');
    CHECK(parse_graph6(line) == g);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);        // truncated body
    CHECK_THROWS_AS(parse_graph6("A_X"), std::invalid_argument);      // trailing chars
    CHECK_THROWS_AS(parse_graph6("A\x1f"), std::invalid_argument);    // char below 63
    CHECK_THROWS_AS(parse_graph6(std::string("A") + static_cast<char>(127)),
                    std::invalid_argument);                           // char above 126
    CHECK_THROWS_AS(parse_graph6("Aw"), std::invalid_argument);       // nonzero padding
    CHECK_THROWS_AS(parse_graph6("~"), std::invalid_argument);        // cut-off header
}

TEST_CASE("adjacency text round trip") {
    const Graph g = petersen_graph();
    std::ostringstream out;
    write_adjacency_text(g, out);
    std::istringstream in(out.str());
    CHECK(parse_adjacency_text(in) == g);

    std::istringstream bad("3 1\n0 3\n");
    CHECK_THROWS_AS(parse_adjacency_text(bad), std::invalid_argument);
    std::istringstream short_file("3 2\n0 1\n");
    CHECK_THROWS_AS(parse_adjacency_text(short_file), std::invalid_argument);
}

TEST_CASE("family generators") {
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(cycle_graph(3) == complete_graph(3));
    CHECK(cycle_graph(6).edge_count() == 6);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(complete_bipartite(2, 3).order() == 5);
    CHECK(star_graph(6).degree(0) == 5);
    CHECK(star_graph(6).edge_count() == 5);
    CHECK(empty_graph(4).edge_count() == 0);

    const Graph pet = petersen_graph();
    CHECK(pet.order() == 10);
    CHECK(pet.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);
    CHECK(is_connected(pet));

    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}

TEST_CASE("random graphs follow the documented RNG contract") {
    CHECK(random_graph(5, 0.0, 99).edge_count() == 0);
    CHECK(random_graph(5, 1.0, 99) == complete_graph(5));
    CHECK(random_graph(8, 0.4, 42) == random_graph(8, 0.4, 42));

    // Re-derive the edge stream from the contract: mt19937_64(seed), one draw
    // per pair in lexicographic order, edge iff (draw >> 11) * 2^-53 < p.
    std::mt19937_64 rng(42);
    std::vector<std::pair<int, int>> expected;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < 0.4)
                expected.emplace_back(i, j);
    CHECK(random_graph(8, 0.4, 42).edges() == expected);
    CHECK_THROWS_AS(random_graph(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("small-order corpus matches the known graph counts") {
    const int all_counts[] = {1, 2, 4, 11, 34, 156};
    const int connected_counts[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        const auto all = all_graphs_up_to_iso(n, false);
        const auto conn = all_graphs_up_to_iso(n, true);
        CHECK(static_cast<int>(all.size()) == all_counts[n - 1]);
        CHECK(static_cast<int>(conn.size()) == connected_counts[n - 1]);
        for (const Graph& g : conn) CHECK(is_connected(g));
        for (const Graph& g : all) CHECK(g.order() == n);
    }
    CHECK(small_graph_corpus(4, true).size() == 1 + 1 + 2 + 6);
    CHECK_THROWS_AS(all_graphs_up_to_iso(7, false), std::invalid_argument);
    CHECK_THROWS_AS(all_graphs_up_to_iso(0, false), std::invalid_argument);
}
