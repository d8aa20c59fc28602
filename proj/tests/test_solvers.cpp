#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "domviz/corpus.hpp"
#include "domviz/families.hpp"
#include "domviz/lemmas.hpp"
#include "domviz/oracles.hpp"
#include "domviz/roman.hpp"
#include "domviz/solvers.hpp"

using namespace domviz;

TEST_CASE("roman function predicates") {
    const Graph k2 = complete_graph(2);
    CHECK(is_rdf(k2, {make_set(2, {1}), VertexSet(2), make_set(2, {0})}));
    CHECK_FALSE(is_rdf(k2, {make_set(2, {0, 1}), VertexSet(2), VertexSet(2)}));

    const Graph c4 = cycle_graph(4);
    const RomanFunction remark_witness{make_set(4, {1, 3}), make_set(4, {2}), make_set(4, {0})};
    CHECK(is_rdf(c4, remark_witness));
    CHECK(roman_weight(remark_witness) == 3);

    CHECK(roman_weight({VertexSet(1), VertexSet(1), make_set(1, {0})}) == 2);
    CHECK(roman_weight({VertexSet::full(3), VertexSet(3), VertexSet(3)}) == 0);

    // Not a partition: overlap and missing vertex both throw.
    CHECK_THROWS_AS(is_rdf(k2, {make_set(2, {0}), make_set(2, {0}), make_set(2, {1})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(is_rdf(k2, {make_set(2, {0}), VertexSet(2), VertexSet(2)}),
                    std::invalid_argument);
    CHECK(is_partition({make_set(2, {1}), VertexSet(2), make_set(2, {0})}, 2));
    CHECK_FALSE(is_partition({make_set(2, {1}), VertexSet(2), VertexSet(2)}, 2));
}

TEST_CASE("fixed-V2 completion") {
    const Graph c4 = cycle_graph(4);
    const RomanFunction f = rdf_from_v2(c4, make_set(4, {0}));
    CHECK(is_rdf(c4, f));
    CHECK(f.v1 == make_set(4, {2}));
    CHECK(f.v0 == make_set(4, {1, 3}));
    CHECK(roman_weight(f) == 3);

    // Weight identity 2|S| + (n - |N[S]|) for arbitrary S on random graphs.
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(9, 0.35, rng());
        VertexSet s(9);
        for (int v = 0; v < 9; ++v)
            if (rng() % 3 == 0) s.add(v);
        const RomanFunction completed = rdf_from_v2(g, s);
        CHECK(is_rdf(g, completed));
        CHECK(roman_weight(completed) ==
              2 * s.count() + (9 - closed_neighborhood(g, s).count()));
    }
}

TEST_CASE("gamma_exact on hand-checked instances") {
    for (int n : {1, 2, 5, 9}) CHECK(gamma_exact(complete_graph(n)).value == 1);
    CHECK(gamma_exact(path_graph(4)).value == 2);
    CHECK(gamma_exact(petersen_graph()).value == 3);
    CHECK(gamma_exact(cycle_graph(5)).value == 2);
    CHECK(gamma_exact(star_graph(6)).value == 1);
    CHECK(gamma_exact(empty_graph(3)).value == 3);

    // Forced witnesses.
    CHECK(gamma_exact(path_graph(3)).witness == make_set(3, {1}));
    CHECK(gamma_exact(star_graph(6)).witness == make_set(6, {0}));
}

TEST_CASE("gamma_roman_exact on hand-checked instances") {
    CHECK(gamma_roman_exact(complete_graph(2)).value == 2);
    CHECK(gamma_roman_exact(cycle_graph(4)).value == 3);
    CHECK(gamma_roman_exact(path_graph(7)).value == 5);
    CHECK(gamma_roman_exact(cycle_graph(5)).value == 4);
    CHECK(gamma_roman_exact(star_graph(6)).value == 2);
    CHECK(gamma_roman_exact(empty_graph(3)).value == 3);
    CHECK(gamma_roman_exact(complete_graph(1)).value == 1);
}

TEST_CASE("witnesses certify the reported values") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        const Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.3, rng());
        const GammaResult gr = gamma_exact(g);
        REQUIRE(gr.ok());
        CHECK(is_dominating(g, gr.witness));
        CHECK(gr.witness.count() == gr.value);

        const RomanResult rr = gamma_roman_exact(g);
        REQUIRE(rr.ok());
        CHECK(is_rdf(g, rr.witness));
        CHECK(roman_weight(rr.witness) == rr.value);
    }
}

TEST_CASE("solver witnesses are deterministic") {
    const Graph g = random_graph(10, 0.3, 77);
    const GammaResult a = gamma_exact(g);
    const GammaResult b = gamma_exact(g);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes_explored == b.nodes_explored);
    const RomanResult ra = gamma_roman_exact(g);
    const RomanResult rb = gamma_roman_exact(g);
    CHECK(ra.witness.v1 == rb.witness.v1);
    CHECK(ra.witness.v2 == rb.witness.v2);
}

TEST_CASE("brute-force oracle hand values") {
    CHECK(brute_force_gamma(cycle_graph(5)) == 2);
    CHECK(brute_force_gamma_roman(cycle_graph(5)) == 4);
    CHECK(brute_force_gamma_roman_labelings(cycle_graph(5)) == 4);
    CHECK(brute_force_gamma(star_graph(6)) == 1);
    CHECK(brute_force_gamma_roman(star_graph(6)) == 2);
    CHECK(brute_force_gamma(complete_graph(1)) == 1);
    CHECK(brute_force_gamma_roman(complete_graph(1)) == 1);
    CHECK(brute_force_gamma(petersen_graph()) == 3);

    CHECK_THROWS_AS(brute_force_gamma(random_graph(17, 0.2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_gamma_roman(random_graph(17, 0.2, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_gamma_roman_labelings(random_graph(13, 0.2, 1)),
                    std::invalid_argument);
}

TEST_CASE("the two gamma_R oracles agree (completion identity, 3^n cross-check)") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 25; ++t) {
        const Graph g = random_graph(4 + static_cast<int>(rng() % 5), 0.35, rng());
        CHECK(brute_force_gamma_roman(g) == brute_force_gamma_roman_labelings(g));
    }
    for (int n = 1; n <= 4; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n, false))
            CHECK(brute_force_gamma_roman(g) == brute_force_gamma_roman_labelings(g));
}

TEST_CASE("branch-and-bound equals the oracles on the small corpus") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : all_graphs_up_to_iso(n, false)) {
            CHECK(gamma_exact(g).value == brute_force_gamma(g));
            CHECK(gamma_roman_exact(g).value == brute_force_gamma_roman(g));
        }
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
        const Graph g = random_graph(7 + static_cast<int>(rng() % 4), 0.3, rng());
        CHECK(gamma_exact(g).value == brute_force_gamma(g));
        CHECK(gamma_roman_exact(g).value == brute_force_gamma_roman(g));
    }
}

TEST_CASE("closed-form path and cycle values, oracle-derived") {
    for (int n = 1; n <= 15; ++n) {
        const Graph p = path_graph(n);
        const int oracle_gamma = brute_force_gamma(p);
        const int oracle_roman = brute_force_gamma_roman(p);
        CHECK(oracle_gamma == (n + 2) / 3);        // ceil(n/3)
        CHECK(oracle_roman == (2 * n + 2) / 3);    // ceil(2n/3)
        CHECK(gamma_exact(p).value == oracle_gamma);
        CHECK(gamma_roman_exact(p).value == oracle_roman);
    }
    for (int n = 3; n <= 15; ++n) {
        const Graph c = cycle_graph(n);
        const int oracle_gamma = brute_force_gamma(c);
        const int oracle_roman = brute_force_gamma_roman(c);
        CHECK(oracle_gamma == (n + 2) / 3);
        CHECK(oracle_roman == (2 * n + 2) / 3);
        CHECK(gamma_exact(c).value == oracle_gamma);
        CHECK(gamma_roman_exact(c).value == oracle_roman);
    }
}

TEST_CASE("monotonicity: adding edges never raises gamma or gamma_R") {
    std::mt19937_64 rng(53);
    for (int chain = 0; chain < 6; ++chain) {
        const int n = 8;
        std::vector<std::pair<int, int>> pool;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pool.emplace_back(i, j);
        std::shuffle(pool.begin(), pool.end(), rng);

        std::vector<std::pair<int, int>> edges;
        int prev_gamma = n, prev_roman = n;
        for (const auto& e : pool) {
            edges.push_back(e);
            const Graph g(n, edges);
            const int cur_gamma = gamma_exact(g).value;
            const int cur_roman = gamma_roman_exact(g).value;
            CHECK(cur_gamma <= prev_gamma);
            CHECK(cur_roman <= prev_roman);
            prev_gamma = cur_gamma;
            prev_roman = cur_roman;
        }
    }
}

TEST_CASE("isolated vertices sit in every witness") {
    // Vertex 4 is isolated; 0-1-2-3 is a path.
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}});
    const GammaResult gr = gamma_exact(g);
    CHECK(gr.witness.contains(4));
    const RomanResult rr = gamma_roman_exact(g);
    CHECK((rr.witness.v1.contains(4) || rr.witness.v2.contains(4)));
    CHECK(gr.value == gamma_exact(path_graph(4)).value + 1);
    CHECK(rr.value == gamma_roman_exact(path_graph(4)).value + 1);
}

TEST_CASE("budgets produce distinct outcomes, never wrong answers") {
    const Graph g = random_graph(12, 0.25, 7);
    SolverBudget tiny;
    tiny.max_nodes = 3;
    CHECK(gamma_exact(g, tiny).status == SolveStatus::budget_exceeded);
    CHECK(gamma_roman_exact(g, tiny).status == SolveStatus::budget_exceeded);

    SolverBudget small_order;
    small_order.max_order = 10;
    CHECK(gamma_exact(g, small_order).status == SolveStatus::order_exceeded);
    CHECK(gamma_roman_exact(g, small_order).status == SolveStatus::order_exceeded);

    CHECK(std::string(to_string(SolveStatus::budget_exceeded)) == "budget-exceeded");
}

TEST_CASE("lemma 1 verdicts") {
    const Lemma1Verdict k2 = check_lemma1(complete_graph(2));
    CHECK(k2.gamma == 1);
    CHECK(k2.gamma_roman == 2);
    CHECK(k2.holds);

    const Lemma1Verdict c4 = check_lemma1(cycle_graph(4));
    CHECK(c4.gamma == 2);
    CHECK(c4.gamma_roman == 3);
    CHECK(c4.holds);

    const Lemma1Verdict e3 = check_lemma1(empty_graph(3));
    CHECK(e3.gamma == 3);
    CHECK(e3.gamma_roman == 3);
    CHECK(e3.holds);

    std::mt19937_64 rng(67);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(3 + static_cast<int>(rng() % 9), 0.3, rng());
        CHECK(check_lemma1(g).holds);
    }
}

TEST_CASE("lemma 2 verdicts") {
    const Graph c4 = cycle_graph(4);
    const RomanFunction witness{make_set(4, {1, 3}), make_set(4, {2}), make_set(4, {0})};
    const Lemma2Verdict v = check_lemma2(c4, witness);
    CHECK(v.optimal_precondition);
    CHECK_FALSE(v.vacuous);
    CHECK(v.v2_dominates_induced);
    CHECK(v.v2_is_gamma_set);
    CHECK(v.induced_gamma == 1);
    CHECK(v.holds());

    const Graph k1 = complete_graph(1);
    const Lemma2Verdict vac = check_lemma2(k1, {VertexSet(1), make_set(1, {0}), VertexSet(1)});
    CHECK(vac.vacuous);
    CHECK(vac.holds());

    // A valid but non-optimal RDF is reported, not silently accepted.
    const RomanFunction heavy{make_set(4, {1, 3}), VertexSet(4), make_set(4, {0, 2})};
    REQUIRE(is_rdf(c4, heavy));
    const Lemma2Verdict rejected = check_lemma2(c4, heavy);
    CHECK_FALSE(rejected.optimal_precondition);
    CHECK_FALSE(rejected.holds());

    const RomanResult c5 = gamma_roman_exact(cycle_graph(5));
    CHECK(check_lemma2(cycle_graph(5), c5.witness).holds());

    std::mt19937_64 rng(71);
    for (int t = 0; t < 30; ++t) {
        const Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.35, rng());
        CHECK(check_lemma2(g, gamma_roman_exact(g).witness).holds());
    }
}
