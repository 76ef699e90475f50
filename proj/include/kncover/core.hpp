#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kncover/bits.hpp"

namespace kncover {

// Exact value of f(H), the product of all vertex degrees. (k+1)^n style
// products overflow machine words quickly, so this is arbitrary precision.
using PotentialValue = boost::multiprecision::cpp_int;

inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on labeled vertices 0..N-1.
/// Immutable after construction; adjacency is kept as per-vertex bitmasks.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
        : n_(vertex_count) {
        if (vertex_count < 0 || vertex_count > kMaxVertices)
            throw std::invalid_argument("graph: vertex count out of range [0,64]");
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("graph: self-loop");
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_) throw std::invalid_argument("graph: endpoint out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("graph: duplicate edge");
        edges_ = std::move(edges);
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (auto [u, v] : edges_) {
            adj_[static_cast<std::size_t>(u)] |= bit(v);
            adj_[static_cast<std::size_t>(v)] |= bit(u);
        }
    }

    static Graph empty_graph(int n) { return Graph(n, {}); }

    static Graph complete(int n) {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
        return Graph(n, std::move(es));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const {
        return u != v && (adj_[static_cast<std::size_t>(u)] >> v) & 1;
    }

    int degree(int v) const { return popcount(neighbors(v)); }

    int min_degree() const {
        int d = n_ == 0 ? 0 : degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    Graph without_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        std::vector<std::pair<int, int>> es;
        es.reserve(edges_.size() - 1);
        bool found = false;
        for (auto e : edges_) {
            if (e.first == u && e.second == v) { found = true; continue; }
            es.push_back(e);
        }
        if (!found) throw std::invalid_argument("graph: edge to remove not present");
        return Graph(n_, std::move(es));
    }

    /// Deletes the vertices in `drop`; survivors are relabeled preserving order.
    Graph remove_vertices(VertexSet drop) const {
        std::vector<int> relabel(static_cast<std::size_t>(n_), -1);
        int next = 0;
        for (int v = 0; v < n_; ++v)
            if (!((drop >> v) & 1)) relabel[static_cast<std::size_t>(v)] = next++;
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : edges_) {
            int a = relabel[static_cast<std::size_t>(u)];
            int b = relabel[static_cast<std::size_t>(v)];
            if (a >= 0 && b >= 0) es.emplace_back(a, b);
        }
        return Graph(next, std::move(es));
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;
};

/// Simple hypergraph: distinct nonempty vertex subsets of 0..N-1.
/// Edges are stored as bitmasks, canonically sorted (ascending vertex lists).
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int vertex_count, const std::vector<std::vector<int>>& edges)
        : Hypergraph(vertex_count, masks_of(edges)) {}

    Hypergraph(int vertex_count, std::vector<VertexSet> edge_masks)
        : n_(vertex_count), edges_(std::move(edge_masks)) {
        if (n_ < 0 || n_ > kMaxVertices)
            throw std::invalid_argument("hypergraph: vertex count out of range [0,64]");
        for (VertexSet e : edges_) {
            if (e == 0) throw std::invalid_argument("hypergraph: empty edge");
            if (e & ~full_set(n_)) throw std::invalid_argument("hypergraph: vertex out of range");
        }
        std::sort(edges_.begin(), edges_.end(), set_lex_less);
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("hypergraph: duplicate edge");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexSet>& edge_masks() const { return edges_; }

    std::vector<int> edge_vertices(int i) const {
        return bits_to_vector(edges_[static_cast<std::size_t>(i)]);
    }

    std::vector<std::vector<int>> edge_lists() const {
        std::vector<std::vector<int>> out;
        out.reserve(edges_.size());
        for (VertexSet e : edges_) out.push_back(bits_to_vector(e));
        return out;
    }

    bool has_edge(VertexSet e) const {
        return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
    }

    /// d_1(v): number of edges containing v.
    int degree1(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("degree1: vertex out of range");
        int d = 0;
        for (VertexSet e : edges_)
            if ((e >> v) & 1) ++d;
        return d;
    }

    int max_degree1() const {
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, degree1(v));
        return best;
    }

    int min_degree1() const {
        if (n_ == 0) return 0;
        int best = degree1(0);
        for (int v = 1; v < n_; ++v) best = std::min(best, degree1(v));
        return best;
    }

    VertexSet covered_vertices() const {
        VertexSet s = 0;
        for (VertexSet e : edges_) s |= e;
        return s;
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    static std::vector<VertexSet> masks_of(const std::vector<std::vector<int>>& edges) {
        std::vector<VertexSet> ms;
        ms.reserve(edges.size());
        for (const auto& e : edges) {
            VertexSet m = 0;
            for (int v : e) {
                if (v < 0 || v >= kMaxVertices)
                    throw std::invalid_argument("hypergraph: vertex out of range");
                if ((m >> v) & 1) throw std::invalid_argument("hypergraph: repeated vertex in edge");
                m |= bit(v);
            }
            ms.push_back(m);
        }
        return ms;
    }

    int n_ = 0;
    std::vector<VertexSet> edges_;
};

/// An edge of a hypergraph with a fixed vertex ordering: the switching pivot.
struct OrderedEdge {
    std::vector<int> vertices;

    VertexSet mask() const { return vector_to_bits(vertices); }
};

inline Hypergraph graph_to_hypergraph(const Graph& g) {
    std::vector<VertexSet> es;
    es.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) es.push_back(bit(u) | bit(v));
    return Hypergraph(g.vertex_count(), std::move(es));
}

/// s-shadow: an s-set is an edge iff some edge of h contains it.
inline Hypergraph shadow(const Hypergraph& h, int s) {
    if (s < 1) throw std::invalid_argument("shadow: s must be >= 1");
    std::vector<VertexSet> out;
    std::vector<int> verts, pick(static_cast<std::size_t>(s), 0);
    for (VertexSet e : h.edge_masks()) {
        if (popcount(e) < s) continue;
        verts = bits_to_vector(e);
        // enumerate s-subsets of this edge
        std::vector<int> idx(static_cast<std::size_t>(s));
        std::iota(idx.begin(), idx.end(), 0);
        int k = static_cast<int>(verts.size());
        while (true) {
            VertexSet m = 0;
            for (int i : idx) m |= bit(verts[static_cast<std::size_t>(i)]);
            out.push_back(m);
            int pos = s - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == k - s + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < s; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    std::sort(out.begin(), out.end(), set_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Hypergraph(h.vertex_count(), std::move(out));
}

inline Graph shadow_graph(const Hypergraph& h) {
    Hypergraph s = shadow(h, 2);
    std::vector<std::pair<int, int>> es;
    es.reserve(s.edge_masks().size());
    for (VertexSet e : s.edge_masks()) {
        int u = lowest_bit(e);
        int v = lowest_bit(e & (e - 1));
        es.emplace_back(u, v);
    }
    return Graph(h.vertex_count(), std::move(es));
}

inline int degree1(const Hypergraph& h, int v) { return h.degree1(v); }

/// f(H) = product of all vertex degrees; 0 iff some vertex is isolated.
inline PotentialValue potential_f(const Hypergraph& h) {
    PotentialValue p = 1;
    for (int v = 0; v < h.vertex_count(); ++v) {
        p *= h.degree1(v);
        if (p == 0) return p;
    }
    return p;
}

/// Connected: no isolated vertex and the 2-shadow spans one component.
/// N = 0 counts as connected.
inline bool is_connected(const Hypergraph& h) {
    int n = h.vertex_count();
    if (n == 0) return true;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (VertexSet e : h.edge_masks()) {
        int first = lowest_bit(e);
        for_each_bit(e, [&](int v) { parent[static_cast<std::size_t>(find(v))] = find(first); });
    }
    for (int v = 0; v < n; ++v)
        if (h.degree1(v) == 0) return false;
    int root = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != root) return false;
    return true;
}

/// H - A: drop the vertices of `a`, shrink edges, drop emptied edges,
/// merge duplicates; survivors relabeled preserving order.
inline Hypergraph remove_vertices(const Hypergraph& h, VertexSet a) {
    int n = h.vertex_count();
    if (a & ~full_set(n)) throw std::invalid_argument("remove_vertices: set out of range");
    std::vector<int> relabel(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!((a >> v) & 1)) relabel[static_cast<std::size_t>(v)] = next++;
    std::vector<VertexSet> es;
    for (VertexSet e : h.edge_masks()) {
        VertexSet kept = e & ~a;
        if (kept == 0) continue;
        VertexSet m = 0;
        for_each_bit(kept, [&](int v) { m |= bit(relabel[static_cast<std::size_t>(v)]); });
        es.push_back(m);
    }
    std::sort(es.begin(), es.end(), set_lex_less);
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Hypergraph(next, std::move(es));
}

}  // namespace kncover
