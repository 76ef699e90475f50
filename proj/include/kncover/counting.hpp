#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "kncover/core.hpp"

namespace kncover {

/// C(n, k) exactly; 0 when k > n. Throws std::overflow_error beyond int64.
inline long long binomial(long long n, long long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i);
        r /= static_cast<unsigned __int128>(i);
        if (r > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
            throw std::overflow_error("binomial: result exceeds 64 bits");
    }
    return static_cast<long long>(r);
}

namespace detail {

inline long long count_independent_rec(const std::vector<VertexSet>& adj, VertexSet avail,
                                       int remaining) {
    if (remaining == 0) return 1;
    if (popcount(avail) < remaining) return 0;
    long long total = 0;
    VertexSet a = avail;
    while (a) {
        int v = lowest_bit(a);
        a &= a - 1;  // a now holds only candidates above v
        total += count_independent_rec(adj, a & ~adj[static_cast<std::size_t>(v)], remaining - 1);
    }
    return total;
}

inline long long count_clique_rec(const std::vector<VertexSet>& adj, VertexSet avail,
                                  int remaining) {
    if (remaining == 0) return 1;
    if (popcount(avail) < remaining) return 0;
    long long total = 0;
    VertexSet a = avail;
    while (a) {
        int v = lowest_bit(a);
        a &= a - 1;
        total += count_clique_rec(adj, a & adj[static_cast<std::size_t>(v)], remaining - 1);
    }
    return total;
}

inline std::vector<VertexSet> conflict_masks(const Hypergraph& h) {
    std::vector<VertexSet> conf(static_cast<std::size_t>(h.vertex_count()), 0);
    for (VertexSet e : h.edge_masks())
        for_each_bit(e, [&](int v) { conf[static_cast<std::size_t>(v)] |= e & ~bit(v); });
    return conf;
}

}  // namespace detail

/// i_t(G): independent sets of size t, by backtracking over bitmask candidates.
inline long long count_independent_sets(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("count_independent_sets: t must be >= 1");
    if (t > g.vertex_count()) return 0;
    std::vector<VertexSet> adj;
    adj.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbors(v));
    return detail::count_independent_rec(adj, full_set(g.vertex_count()), t);
}

/// i_t(H): t-sets meeting every edge at most once. Two vertices conflict
/// exactly when they share an edge, so this backtracks over per-vertex
/// conflict masks built straight from the edge list.
inline long long count_independent_sets(const Hypergraph& h, int t) {
    if (t < 1) throw std::invalid_argument("count_independent_sets: t must be >= 1");
    if (t > h.vertex_count()) return 0;
    return detail::count_independent_rec(detail::conflict_masks(h), full_set(h.vertex_count()), t);
}

/// k_t(G): cliques of size t.
inline long long count_cliques(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("count_cliques: t must be >= 1");
    if (t > g.vertex_count()) return 0;
    std::vector<VertexSet> adj;
    adj.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbors(v));
    return detail::count_clique_rec(adj, full_set(g.vertex_count()), t);
}

/// Counts of unordered vertex triples inducing exactly 0, 1, 2, 3 edges.
/// tau0 = i_3(G), tau3 = k_3(G), and the four counts sum to C(N,3).
struct TripleCensus {
    long long tau0 = 0, tau1 = 0, tau2 = 0, tau3 = 0;

    long long total() const { return tau0 + tau1 + tau2 + tau3; }
    friend bool operator==(const TripleCensus&, const TripleCensus&) = default;
};

inline TripleCensus triple_census(const Graph& g) {
    TripleCensus c;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                int e = g.has_edge(u, v) + g.has_edge(u, w) + g.has_edge(v, w);
                (e == 0 ? c.tau0 : e == 1 ? c.tau1 : e == 2 ? c.tau2 : c.tau3) += 1;
            }
    return c;
}

}  // namespace kncover
