#include <catch2/catch_amalgamated.hpp>

#include "kncover/counting.hpp"
#include "kncover/covering.hpp"
#include "kncover/gen.hpp"
#include "oracles.hpp"

using namespace kncover;

TEST_CASE("binomial basics and overflow guard") {
    CHECK(binomial(4, 3) == 4);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(56, 8) == 1420494075);  // Pascal-oracle derived
    CHECK(binomial(64, 32) == 1832624140942590534LL);
    CHECK_THROWS_AS(binomial(68, 34), std::overflow_error);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial agrees with the Pascal recurrence") {
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
}

TEST_CASE("independent set counts on named graphs") {
    CHECK(count_independent_sets(Graph::empty_graph(7), 3) == binomial(7, 3));
    Graph matching(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(count_independent_sets(matching, 3) == 8);  // 8 * C(3,3)
    CHECK(count_independent_sets(make_split(6, 2), 3) == 4);
    CHECK(count_independent_sets(Graph::complete(5), 2) == 0);
    CHECK(count_independent_sets(Graph::empty_graph(3), 5) == 0);
    CHECK_THROWS_AS(count_independent_sets(matching, 0), std::invalid_argument);
}

TEST_CASE("hypergraph independence equals 2-shadow independence") {
    Rng rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        Hypergraph h = random_hypergraph_with_isolated(rng, 9, 7, 5);
        for (int t = 2; t <= 4; ++t)
            CHECK(count_independent_sets(h, t) == count_independent_sets(shadow_graph(h), t));
    }
}

TEST_CASE("counts agree with the subset-enumeration oracle") {
    Rng rng(778);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(rng, rng.range(1, 12), rng.range(10, 80));
        for (int t = 1; t <= 5; ++t) {
            CHECK(count_independent_sets(g, t) == oracle::count_independent_subsets(g, t));
            CHECK(count_cliques(g, t) == oracle::count_clique_subsets(g, t));
        }
    }
    for (int trial = 0; trial < 30; ++trial) {
        Hypergraph h = random_hypergraph_with_isolated(rng, 9, 6, 5);
        for (int t = 1; t <= 4; ++t)
            CHECK(count_independent_sets(h, t) == oracle::count_independent_subsets(h, t));
    }
}

TEST_CASE("clique counts on named graphs") {
    CHECK(count_cliques(Graph::complete(4), 3) == 4);
    CHECK(count_cliques(make_cl(3, 2, 1), 3) == 3);
    CHECK(count_cliques(Graph::empty_graph(4), 2) == 0);
}

TEST_CASE("triple census of named graphs") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    TripleCensus c = triple_census(c5);
    CHECK(c.tau0 == 0);
    CHECK(c.tau1 == 5);
    CHECK(c.tau2 == 5);
    CHECK(c.tau3 == 0);
    long long degsum = 0;
    for (int v = 0; v < 5; ++v) degsum += c5.degree(v) * (5 - 1 - c5.degree(v));
    CHECK(c.tau1 + c.tau2 == degsum / 2);

    TripleCensus e = triple_census(Graph::empty_graph(5));
    CHECK(e.tau0 == 10);
    CHECK(e.tau1 + e.tau2 + e.tau3 == 0);
    TripleCensus k = triple_census(Graph::complete(5));
    CHECK(k.tau3 == 10);
    CHECK(k.tau0 + k.tau1 + k.tau2 == 0);
}

TEST_CASE("census identities on random graphs") {
    Rng rng(779);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, rng.range(3, 10), rng.range(0, 100));
        int N = g.vertex_count();
        TripleCensus c = triple_census(g);
        CHECK(c.total() == binomial(N, 3));
        CHECK(c.tau0 == count_independent_sets(g, 3));
        CHECK(c.tau3 == count_cliques(g, 3));
        CHECK(count_independent_sets(g, 3) ==
              binomial(N, 3) - c.tau1 - c.tau2 - count_cliques(g, 3));
        long long degsum = 0;
        for (int v = 0; v < N; ++v)
            degsum += static_cast<long long>(g.degree(v)) * (N - 1 - g.degree(v));
        CHECK(2 * (c.tau1 + c.tau2) == degsum);
    }
}
