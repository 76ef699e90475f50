#include <catch2/catch_amalgamated.hpp>

#include "kncover/covering.hpp"
#include "kncover/enumerate.hpp"
#include "kncover/gen.hpp"
#include "kncover/iso.hpp"
#include "oracles.hpp"

using namespace kncover;

TEST_CASE("clique cover predicate") {
    CHECK(is_kn_covered(Graph::complete(4), 4));
    CHECK(is_kn_covered(make_split(6, 2), 3));
    CHECK_FALSE(is_kn_covered(Graph(3, {{0, 1}, {1, 2}}), 3));
    CHECK(is_kn_covered(Graph(3, {{0, 1}, {1, 2}}), 1));
    CHECK(is_kn_covered(Graph::empty_graph(5), 1));
    CHECK_FALSE(is_kn_covered(Graph::empty_graph(5), 2));
}

TEST_CASE("associated hypergraph lists the n-cliques") {
    Hypergraph a = associated_hypergraph(make_split(6, 2), 3);
    CHECK(a == Hypergraph(6, std::vector<std::vector<int>>{
                                 {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}}));
    CHECK(associated_hypergraph(Graph::complete(4), 3).edge_count() == 4);
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(associated_hypergraph(c5, 3).edge_count() == 0);
    // n = 1: singleton edges
    CHECK(associated_hypergraph(c5, 1).edge_count() == 5);
}

TEST_CASE("cover holds exactly when the associated hypergraph has no isolated vertex") {
    Rng rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, rng.range(1, 8), rng.range(20, 90));
        for (int n = 1; n <= 4; ++n) {
            Hypergraph a = associated_hypergraph(g, n);
            bool no_isolated = a.vertex_count() == 0 || a.min_degree1() >= 1;
            CHECK(is_kn_covered(g, n) == no_isolated);
        }
    }
}

TEST_CASE("edge-critical reduction fixed points and frozen K4 result") {
    Graph s72 = make_split(7, 2);
    CHECK(edge_critical_reduction(s72, 3) == s72);
    CHECK(edge_critical_reduction(make_split(6, 1), 2) == make_split(6, 1));

    // K4 sheds exactly its lexicographically first edge
    Graph red = edge_critical_reduction(Graph::complete(4), 3);
    CHECK(red == Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(is_edge_critical(red, 3));

    Graph matching(6, {{0, 1}, {2, 3}, {4, 5}});
    CHECK(edge_critical_reduction(matching, 2) == matching);

    CHECK_THROWS_AS(edge_critical_reduction(Graph::empty_graph(3), 2), std::invalid_argument);
}

TEST_CASE("reduction keeps coverage, criticality and never loses independent sets") {
    Rng rng(62);
    int done = 0;
    while (done < 25) {
        Graph g = random_graph(rng, rng.range(4, 8), rng.range(40, 95));
        int n = rng.range(2, 3);
        if (!is_kn_covered(g, n)) continue;
        ++done;
        Graph red = edge_critical_reduction(g, n);
        CHECK(red.vertex_count() == g.vertex_count());
        CHECK(is_edge_critical(red, n));
        for (int t = 2; t <= 4; ++t)
            CHECK(count_independent_sets(red, t) >= count_independent_sets(g, t));
    }
}

TEST_CASE("observation checker on edge-critical and non-critical inputs") {
    CriticalityReport s = check_observation(make_split(8, 2), 3, 3);
    CHECK(s.is_covered);
    CHECK(s.is_edge_critical);
    CHECK(s.shadow_equals_graph);
    CHECK(s.it_equals);
    CHECK(s.hyperedge_removal_isolates);
    CHECK(s.min_degree == 2);

    CriticalityReport k4 = check_observation(Graph::complete(4), 3, 3);
    CHECK(k4.is_covered);
    CHECK_FALSE(k4.is_edge_critical);

    Graph two_k3(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CriticalityReport d = check_observation(two_k3, 3, 3);
    CHECK(d.is_edge_critical);
    CHECK(d.all_four());
    CHECK(d.it_equals);
    CHECK(d.min_degree == 2);
}

TEST_CASE("observation over all edge-critical covered classes up to 7 vertices") {
    // shadow equality, i_t equality and the degree floor hold everywhere;
    // the hyperedge-removal property is refuted on exactly one class each at
    // N = 6 and N = 7 (see the dedicated counterexample below)
    const long long expected_removal_violations[] = {0, 0, 0, 0, 0, 0, 1, 1};
    for (int N = 3; N <= 7; ++N) {
        long long removal_violations = 0;
        auto classes = enumerate_graphs_cached(N);
        for (const Graph& g : *classes) {
            if (!is_edge_critical(g, 3)) continue;
            CriticalityReport r = check_observation(g, 3, 3);
            CHECK(r.shadow_equals_graph);
            CHECK(r.it_equals);
            CHECK(r.min_degree == 2);
            if (!r.hyperedge_removal_isolates) ++removal_violations;
        }
        CHECK(removal_violations == expected_removal_violations[N]);
    }
}

TEST_CASE("hyperedge-removal property has a genuine edge-critical counterexample") {
    // central triangle plus three pendant triangles, one per central edge
    Graph g(6, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    REQUIRE(is_edge_critical(g, 3));
    Hypergraph assoc = associated_hypergraph(g, 3);
    REQUIRE(assoc.edge_count() == 4);
    // the central hyperedge has no private vertex: its removal isolates nobody
    VertexSet central = bit(3) | bit(4) | bit(5);
    bool central_has_private = false;
    for_each_bit(central, [&](int v) {
        if (assoc.degree1(v) == 1) central_has_private = true;
    });
    CHECK_FALSE(central_has_private);
    CriticalityReport r = check_observation(g, 3, 3);
    CHECK_FALSE(r.hyperedge_removal_isolates);
    CHECK(r.shadow_equals_graph);
    CHECK(r.it_equals);
    CHECK(r.min_degree == 2);
}

TEST_CASE("split construction") {
    Graph s = make_split(6, 2);
    CHECK(s.edge_count() == 9);
    CHECK(count_independent_sets(s, 3) == 4);
    CHECK(make_split(4, 0) == Graph::empty_graph(4));
    CHECK(make_split(4, 4) == Graph::complete(4));
    CHECK_THROWS_AS(make_split(3, 4), std::invalid_argument);
}

TEST_CASE("split graph is the extremal construction") {
    for (int n = 2; n <= 4; ++n)
        for (int N = n; N <= 9; ++N) {
            Graph s = make_split(N, n - 1);
            CHECK(is_kn_covered(s, n));
            CHECK(is_edge_critical(s, n));
            for (int t = 2; t <= 4; ++t)
                CHECK(count_independent_sets(s, t) == binomial(N - n + 1, t));
        }
}

TEST_CASE("overlapping-cliques construction") {
    Graph cl = make_cl(3, 2, 1);
    CHECK(cl.vertex_count() == 7);
    CHECK(count_cliques(cl, 3) == 3);

    Graph cl0 = make_cl(3, 2, 0);
    CHECK(cl0.vertex_count() == 6);
    CHECK(count_cliques(cl0, 3) == 2);
    CHECK(are_isomorphic(cl0, Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})));

    Graph path_plus(7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}});
    CHECK(are_isomorphic(make_cl(2, 3, 1), path_plus));

    CHECK_THROWS_AS(make_cl(3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_cl(3, 2, 3), std::invalid_argument);
}

TEST_CASE("clique counts of the construction match the closed form") {
    for (int n = 2; n <= 4; ++n)
        for (int q = 1; q <= 2; ++q)
            for (int r = 0; r <= n - 1; ++r) {
                Graph cl = make_cl(n, q, r);
                CHECK(cl.vertex_count() == q * n + r);
                CHECK(is_kn_covered(cl, n));
                for (int t = 2; t <= n; ++t)
                    CHECK(count_cliques(cl, t) ==
                          (q + 1) * binomial(n, t) - binomial(n - r, t));
            }
}

TEST_CASE("induction-step audit on the named instances") {
    InductionAudit a = induction_step_audit(make_split(9, 2), 3, 4);
    CHECK(a.s == 1);
    CHECK(a.bound_holds);
    CHECK(a.it_g == 35);  // C(7,4)
    CHECK(a.it_g == binomial(9 - 3 + 1, 4));

    Graph three_k3(9, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}, {6, 8}, {7, 8}});
    InductionAudit b = induction_step_audit(three_k3, 3, 4);
    CHECK(b.s == 3);
    CHECK(b.s_clique_in_unique_kn);
    CHECK(b.bound_holds);

    // two triangles sharing a vertex plus a disjoint triangle
    Graph mixed(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {5, 6}, {5, 7}, {6, 7}});
    InductionAudit c = induction_step_audit(mixed, 3, 4);
    CHECK(c.bound_holds);

    CHECK_THROWS_AS(induction_step_audit(make_split(9, 2), 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(induction_step_audit(Graph::complete(4), 3, 4), std::invalid_argument);
}
