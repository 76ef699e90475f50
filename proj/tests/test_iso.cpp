#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "kncover/covering.hpp"
#include "kncover/gen.hpp"
#include "kncover/iso.hpp"
#include "kncover/switching.hpp"
#include "oracles.hpp"

using namespace kncover;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        es.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.vertex_count(), std::move(es));
}

Hypergraph permuted(const Hypergraph& h, const std::vector<int>& perm) {
    std::vector<std::vector<int>> es;
    for (const auto& e : h.edge_lists()) {
        std::vector<int> out;
        for (int v : e) out.push_back(perm[static_cast<std::size_t>(v)]);
        std::sort(out.begin(), out.end());
        es.push_back(out);
    }
    return Hypergraph(h.vertex_count(), es);
}

std::vector<int> random_perm(Rng& rng, int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)],
                                              p[static_cast<std::size_t>(rng.range(0, i))]);
    return p;
}

}  // namespace

TEST_CASE("relabeled paths share a key, distinct shapes do not") {
    Graph p1(3, {{0, 1}, {1, 2}});
    Graph p2(3, {{0, 2}, {0, 1}});  // relabeling of the path
    CHECK(canonical_key(p1) == canonical_key(p2));

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(canonical_key(c4) == canonical_key(p4));
}

TEST_CASE("split graph with one clique vertex is the star") {
    Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(are_isomorphic(make_split(5, 1), star));
}

TEST_CASE("two triangles are not a hexagon") {
    Graph two_k3(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK_FALSE(are_isomorphic(two_k3, c6));
    CHECK(are_isomorphic(two_k3, two_k3));
}

TEST_CASE("regular non-isomorphic pairs split correctly") {
    // Petersen graph vs K_{5,5} minus a perfect matching: both 3-regular on 10
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                        {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < 5; ++u)
        for (int v = 5; v < 10; ++v)
            if (v - 5 != u) es.emplace_back(u, v);
    Graph k55_minus(10, std::move(es));
    CHECK_FALSE(are_isomorphic(petersen, k55_minus));
    Rng rng(31);
    CHECK(are_isomorphic(petersen, permuted(petersen, random_perm(rng, 10))));
}

TEST_CASE("keys are invariant under relabeling (randomized)") {
    Rng rng(32);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = rng.range(1, 12);
        Graph g = random_graph(rng, n, rng.range(0, 100));
        Graph h = permuted(g, random_perm(rng, n));
        REQUIRE(canonical_key(g) == canonical_key(h));
    }
}

TEST_CASE("graph keys match the exhaustive-permutation oracle") {
    Rng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        int n = rng.range(1, 7);
        Graph a = random_graph(rng, n, rng.range(0, 100));
        Graph b = random_graph(rng, n, rng.range(0, 100));
        CHECK(are_isomorphic(a, b) == oracle::isomorphic_exhaustive(a, b));
    }
}

TEST_CASE("hypergraph keys are relabeling-invariant and exact") {
    Rng rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        Hypergraph h = random_hypergraph_with_isolated(rng, 7, 6, 5);
        Hypergraph p = permuted(h, random_perm(rng, h.vertex_count()));
        REQUIRE(canonical_key(h) == canonical_key(p));
    }
    for (int trial = 0; trial < 120; ++trial) {
        Hypergraph a = random_hypergraph_with_isolated(rng, 6, 4, 4);
        Hypergraph b = random_hypergraph_with_isolated(rng, 6, 4, 4);
        CHECK(are_isomorphic(a, b) == oracle::isomorphic_exhaustive(a, b));
    }
}

TEST_CASE("switched hypergraph lands in a new class when f drops") {
    Hypergraph h(6, std::vector<std::vector<int>>{{0, 1, 2}, {1, 3, 4}, {2, 3, 5}});
    SwitchOutcome out = edge_switch(h, default_ordering(h, bit(0) | bit(1) | bit(2)));
    CHECK_FALSE(canonical_key(h) == canonical_key(out.result));
}

TEST_CASE("keys are deterministic and stable") {
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
    CHECK(canonical_key(g).bytes == canonical_key(g).bytes);
    CHECK(canonical_key(g).hex() == canonical_key(g).hex());
    // highly symmetric inputs stay fast and exact
    CHECK(canonical_key(Graph::empty_graph(12)) == canonical_key(Graph::empty_graph(12)));
    CHECK(canonical_key(Graph::complete(12)) == canonical_key(Graph::complete(12)));
}

TEST_CASE("mismatched degree sequences give different keys") {
    Rng rng(35);
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.range(2, 9);
        Graph a = random_graph(rng, n, 50);
        Graph b = random_graph(rng, n, 50);
        std::vector<int> da, db;
        for (int v = 0; v < n; ++v) {
            da.push_back(a.degree(v));
            db.push_back(b.degree(v));
        }
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db) CHECK_FALSE(canonical_key(a) == canonical_key(b));
    }
}

TEST_CASE("size limits are enforced") {
    CHECK_THROWS_AS(canonical_key(Graph::empty_graph(13)), std::invalid_argument);
    CHECK_THROWS_AS(canonical_key(Hypergraph(11, std::vector<std::vector<int>>{{0, 1}})),
                    std::invalid_argument);
}
