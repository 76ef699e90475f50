#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kncover/core.hpp"

namespace kncover {

/// Seeded generators for the randomized suites. Bounded draws go through
/// plain modulo reduction so sequences are identical across platforms
/// (std::uniform_int_distribution is not portable).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// uniform-ish integer in [lo, hi]
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// derived engine for sample i, independent of thread scheduling
    static Rng for_sample(std::uint64_t seed, std::uint64_t index) {
        return Rng((seed + 0x9E3779B97F4A7C15ULL * (index + 1)) ^ (index << 17));
    }

private:
    std::mt19937_64 engine_;
};

inline Graph random_graph(Rng& rng, int n, int percent_edges) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.range(0, 99) < percent_edges) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

/// Random simple hypergraph of mixed edge sizes. Vertices that end up in no
/// edge are relabeled away, so the result has minimum degree >= 1.
inline Hypergraph random_hypergraph(Rng& rng, int max_n, int max_edges, int max_edge_size) {
    int pool = rng.range(2, max_n);
    int m = rng.range(1, max_edges);
    std::vector<VertexSet> edges;
    for (int i = 0; i < m; ++i) {
        int k = rng.range(1, std::min(pool, max_edge_size));
        VertexSet e = 0;
        while (popcount(e) < k) e |= bit(rng.range(0, pool - 1));
        edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end(), set_lex_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    VertexSet covered = 0;
    for (VertexSet e : edges) covered |= e;
    Hypergraph raw(pool, std::move(edges));
    return remove_vertices(raw, full_set(pool) & ~covered);
}

/// Variant keeping isolated vertices: used where the monotonicity-only
/// properties are exercised.
inline Hypergraph random_hypergraph_with_isolated(Rng& rng, int max_n, int max_edges,
                                                  int max_edge_size) {
    int n = rng.range(2, max_n);
    int m = rng.range(1, max_edges);
    std::vector<VertexSet> edges;
    for (int i = 0; i < m; ++i) {
        int k = rng.range(1, std::min(n, max_edge_size));
        VertexSet e = 0;
        while (popcount(e) < k) e |= bit(rng.range(0, n - 1));
        edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end(), set_lex_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Hypergraph(n, std::move(edges));
}

inline Hypergraph random_connected_hypergraph(Rng& rng, int max_n, int max_edges,
                                              int max_edge_size) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Hypergraph h = random_hypergraph(rng, max_n, max_edges, max_edge_size);
        if (is_connected(h)) return h;
    }
    // single edge spanning two vertices is always connected
    return Hypergraph(2, std::vector<VertexSet>{bit(0) | bit(1)});
}

}  // namespace kncover
