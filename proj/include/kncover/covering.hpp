#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kncover/counting.hpp"
#include "kncover/core.hpp"

namespace kncover {

namespace detail {

inline void collect_cliques_rec(const std::vector<VertexSet>& adj, VertexSet avail,
                                VertexSet current, int remaining,
                                std::vector<VertexSet>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (popcount(avail) < remaining) return;
    VertexSet a = avail;
    while (a) {
        int v = lowest_bit(a);
        a &= a - 1;
        collect_cliques_rec(adj, a & adj[static_cast<std::size_t>(v)], current | bit(v),
                            remaining - 1, out);
    }
}

inline std::vector<VertexSet> all_cliques(const Graph& g, int n) {
    std::vector<VertexSet> adj;
    adj.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbors(v));
    std::vector<VertexSet> out;
    if (n >= 1 && n <= g.vertex_count())
        collect_cliques_rec(adj, full_set(g.vertex_count()), 0, n, out);
    return out;
}

}  // namespace detail

/// Every vertex lies in at least one n-clique.
inline bool is_kn_covered(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("is_kn_covered: n must be >= 1");
    if (n == 1) return true;
    if (n > g.vertex_count()) return g.vertex_count() == 0;
    VertexSet covered = 0;
    for (VertexSet c : detail::all_cliques(g, n)) covered |= c;
    return covered == full_set(g.vertex_count());
}

/// The n-uniform hypergraph whose edges are exactly the n-cliques of g.
inline Hypergraph associated_hypergraph(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("associated_hypergraph: n must be >= 1");
    std::vector<VertexSet> cliques = detail::all_cliques(g, n);
    std::sort(cliques.begin(), cliques.end(), set_lex_less);
    return Hypergraph(g.vertex_count(), std::move(cliques));
}

/// Greedy edge-critical reduction: scan edges in lexicographic (u,v) order,
/// remove the first whose deletion keeps the graph K_n-covered, restart;
/// stop when nothing is removable.
inline Graph edge_critical_reduction(const Graph& g, int n) {
    if (!is_kn_covered(g, n))
        throw std::invalid_argument("edge_critical_reduction: input is not K_n-covered");
    Graph cur = g;
    bool removed = true;
    while (removed) {
        removed = false;
        for (auto [u, v] : cur.edges()) {
            Graph candidate = cur.without_edge(u, v);
            if (is_kn_covered(candidate, n)) {
                cur = std::move(candidate);
                removed = true;
                break;
            }
        }
    }
    return cur;
}

inline bool is_edge_critical(const Graph& g, int n) {
    if (!is_kn_covered(g, n)) return false;
    for (auto [u, v] : g.edges())
        if (is_kn_covered(g.without_edge(u, v), n)) return false;
    return true;
}

/// The four properties of edge-critical K_n-covered graphs, evaluated
/// unconditionally so the checker doubles as a theorem test.
struct CriticalityReport {
    bool is_covered = false;
    bool is_edge_critical = false;
    bool shadow_equals_graph = false;
    bool it_equals = false;
    bool hyperedge_removal_isolates = false;
    int min_degree = 0;

    bool all_four() const {
        return shadow_equals_graph && it_equals && hyperedge_removal_isolates;
    }
};

inline CriticalityReport check_observation(const Graph& g, int n, int t) {
    CriticalityReport r;
    r.is_covered = is_kn_covered(g, n);
    r.is_edge_critical = r.is_covered && is_edge_critical(g, n);
    Hypergraph assoc = associated_hypergraph(g, n);
    r.shadow_equals_graph = shadow_graph(assoc) == g;
    r.it_equals = count_independent_sets(g, t) == count_independent_sets(assoc, t);
    r.hyperedge_removal_isolates = true;
    for (VertexSet e : assoc.edge_masks()) {
        bool isolates = false;
        for_each_bit(e, [&](int v) {
            if (assoc.degree1(v) == 1) isolates = true;
        });
        if (!isolates) {
            r.hyperedge_removal_isolates = false;
            break;
        }
    }
    r.min_degree = g.min_degree();
    return r;
}

/// S_{N,k} = K_k joined to an empty graph on N-k vertices.
inline Graph make_split(int N, int k) {
    if (k < 0 || k > N) throw std::invalid_argument("make_split: need 0 <= k <= N");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) es.emplace_back(u, v);
        for (int v = k; v < N; ++v) es.emplace_back(u, v);
    }
    return Graph(N, std::move(es));
}

/// Two K_n sharing n-r vertices plus q-1 disjoint K_n, on N = qn + r vertices.
/// r = 0 degenerates to q disjoint copies of K_n.
inline Graph make_cl(int n, int q, int r) {
    if (n < 1 || q < 1 || r < 0 || r > n - 1)
        throw std::invalid_argument("make_cl: need n >= 1, q >= 1, 0 <= r <= n-1");
    int N = q * n + r;
    std::vector<std::pair<int, int>> es;
    auto add_clique = [&](int lo, int hi) {
        for (int u = lo; u < hi; ++u)
            for (int v = u + 1; v < hi; ++v) es.emplace_back(u, v);
    };
    add_clique(0, n);
    add_clique(r, r + n);  // overlaps the first copy in n - r vertices
    for (int i = 1; i < q; ++i) add_clique(n + r + (i - 1) * n, n + r + i * n);
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(N, std::move(es));
}

/// Audit of the t >= 4 induction step: pick the least vertex v of degree n-1,
/// form S = {u in N[v] : d(u) = n-1}, and check the counting chain that
/// telescopes into the C(N-n+1, t) bound.
struct InductionAudit {
    int v = -1;
    std::vector<int> s_vertices;
    int s = 0;
    bool s_clique_in_unique_kn = false;
    long long a_count = 0;           // |{I in I_t : I cap S = empty}|
    long long b_count = 0;           // |{I in I_t : |I cap S| = 1}|
    long long it_g = 0;              // i_t(G)
    long long it_gs = 0;             // i_t(G - S)
    long long itm1_gs = 0;           // i_{t-1}(G - S)
    long long bound = 0;             // C(N-n+1, t)
    bool a_equals = false;           // |A| == i_t(G - S)
    bool b_bounded = false;          // |B| <= s * i_{t-1}(G - S)
    bool chain_holds = false;        // full telescoped inequality chain
    bool bound_holds = false;        // all of the above
};

inline InductionAudit induction_step_audit(const Graph& g, int n, int t) {
    if (t < 4) throw std::invalid_argument("induction_step_audit: t must be >= 4");
    if (!is_edge_critical(g, n))
        throw std::invalid_argument("induction_step_audit: input not edge-critical K_n-covered");
    InductionAudit a;
    int N = g.vertex_count();
    for (int v = 0; v < N; ++v)
        if (g.degree(v) == n - 1) { a.v = v; break; }
    if (a.v < 0)
        throw std::invalid_argument("induction_step_audit: no vertex of degree n-1");

    VertexSet closed = g.neighbors(a.v) | bit(a.v);
    VertexSet s_mask = 0;
    for_each_bit(closed, [&](int u) {
        if (g.degree(u) == n - 1) s_mask |= bit(u);
    });
    a.s_vertices = bits_to_vector(s_mask);
    a.s = popcount(s_mask);

    bool clique = true;
    for (int u : a.s_vertices)
        for (int w : a.s_vertices)
            if (u < w && !g.has_edge(u, w)) clique = false;
    long long containing = 0;
    for (VertexSet c : detail::all_cliques(g, n))
        if ((c & s_mask) == s_mask) ++containing;
    a.s_clique_in_unique_kn = clique && containing == 1;

    a.it_g = count_independent_sets(g, t);
    Graph gs = g.remove_vertices(s_mask);
    a.it_gs = count_independent_sets(gs, t);
    a.itm1_gs = count_independent_sets(gs, t - 1);

    // classify every independent t-set by |I cap S| via direct enumeration,
    // independent of the backtracking counter
    long long more_than_one = 0;
    {
        std::vector<int> idx(static_cast<std::size_t>(t));
        for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
        if (t <= N) {
            while (true) {
                bool indep = true;
                for (int i = 0; i < t && indep; ++i)
                    for (int j = i + 1; j < t; ++j)
                        if (g.has_edge(idx[static_cast<std::size_t>(i)],
                                       idx[static_cast<std::size_t>(j)])) {
                            indep = false;
                            break;
                        }
                if (indep) {
                    int in_s = 0;
                    for (int i = 0; i < t; ++i)
                        if ((s_mask >> idx[static_cast<std::size_t>(i)]) & 1) ++in_s;
                    if (in_s == 0) ++a.a_count;
                    else if (in_s == 1) ++a.b_count;
                    else ++more_than_one;
                }
                int pos = t - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == N - t + pos) --pos;
                if (pos < 0) break;
                ++idx[static_cast<std::size_t>(pos)];
                for (int j = pos + 1; j < t; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }

    a.bound = binomial(N - n + 1, t);
    a.a_equals = a.a_count == a.it_gs;
    a.b_bounded = a.b_count <= static_cast<long long>(a.s) * a.itm1_gs;

    int m = N - a.s - n + 1;
    long long telescoped = binomial(m, t);
    for (int i = 0; i < a.s; ++i) telescoped += binomial(m + i, t - 1);
    bool middle = a.it_gs <= binomial(m, t) && a.itm1_gs <= binomial(m, t - 1);
    a.chain_holds = middle &&
                    a.it_g <= a.it_gs + static_cast<long long>(a.s) * a.itm1_gs &&
                    static_cast<long long>(a.s) * a.itm1_gs <= telescoped - binomial(m, t) &&
                    telescoped == a.bound;
    a.bound_holds = a.s_clique_in_unique_kn && more_than_one == 0 && a.a_equals &&
                    a.b_bounded && a.chain_holds && a.it_g <= a.bound;
    return a;
}

}  // namespace kncover
