#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kncover/core.hpp"

namespace kncover {

inline constexpr int kGraphIsoLimit = 12;       // vertices
inline constexpr int kHypergraphIsoLimit = 10;  // vertices (edge count is free)

/// Order-independent fingerprint of an isomorphism class: the relabeled edge
/// set under the canonical vertex permutation. Equal keys iff isomorphic.
struct CanonicalKey {
    std::vector<unsigned char> bytes;

    std::string hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(bytes.size() * 2);
        for (unsigned char b : bytes) {
            s.push_back(digits[b >> 4]);
            s.push_back(digits[b & 0xf]);
        }
        return s;
    }

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
        return a.bytes < b.bytes;
    }
};

namespace detail {

/// Node-colored graph for the labeling engine. Hypergraphs are fed in as
/// their vertex/edge incidence structure with the two sides colored apart.
struct ColoredGraph {
    int n = 0;
    std::vector<Bits128> adj;
    std::vector<int> color;
};

using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

class Canonizer {
public:
    explicit Canonizer(const ColoredGraph& g) : g_(g) {}

    /// order[i] = original vertex placed at canonical position i.
    std::vector<int> canonical_order() {
        Partition p = initial_partition();
        search(p);
        return best_order_;
    }

private:
    Partition initial_partition() const {
        std::map<int, Cell> by_color;
        for (int v = 0; v < g_.n; ++v) by_color[g_.color[static_cast<std::size_t>(v)]].push_back(v);
        Partition p;
        for (auto& [c, cell] : by_color) p.push_back(std::move(cell));
        return p;
    }

    static Bits128 cell_mask(const Cell& c) {
        Bits128 m;
        for (int v : c) m.set(v);
        return m;
    }

    // 1-dimensional refinement to an equitable partition: split every cell by
    // the number of neighbors its members have in each splitter cell, until
    // nothing splits. Subcells are ordered by ascending count.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t si = 0; si < p.size() && !changed; ++si) {
                Bits128 smask = cell_mask(p[si]);
                for (std::size_t ci = 0; ci < p.size(); ++ci) {
                    Cell& c = p[ci];
                    if (c.size() <= 1) continue;
                    std::map<int, Cell> by;
                    for (int v : c)
                        by[(g_.adj[static_cast<std::size_t>(v)] & smask).count()].push_back(v);
                    if (by.size() <= 1) continue;
                    Partition np;
                    np.reserve(p.size() + by.size() - 1);
                    for (std::size_t j = 0; j < p.size(); ++j) {
                        if (j == ci)
                            for (auto& [cnt, sub] : by) np.push_back(std::move(sub));
                        else
                            np.push_back(std::move(p[j]));
                    }
                    p = std::move(np);
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<std::uint64_t> serialize(const std::vector<int>& order) const {
        int n = g_.n;
        std::vector<std::uint64_t> out(
            (static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2 + 63) / 64, 0);
        std::size_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (g_.adj[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])].test(
                        order[static_cast<std::size_t>(j)]))
                    out[k / 64] |= std::uint64_t{1} << (k % 64);
        return out;
    }

    void handle_leaf(const Partition& p) {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(g_.n));
        for (const Cell& c : p) order.push_back(c.front());
        auto ser = serialize(order);
        if (!have_best_ || ser < best_ser_) {
            best_ser_ = std::move(ser);
            best_order_ = std::move(order);
            have_best_ = true;
            return;
        }
        if (ser == best_ser_ && autos_.size() < kMaxAutos) {
            // Two orderings with identical serialized adjacency give a genuine
            // automorphism: best_order_[i] -> order[i].
            std::vector<int> gamma(static_cast<std::size_t>(g_.n));
            bool identity = true;
            for (int i = 0; i < g_.n; ++i) {
                gamma[static_cast<std::size_t>(best_order_[static_cast<std::size_t>(i)])] =
                    order[static_cast<std::size_t>(i)];
                identity = identity && best_order_[static_cast<std::size_t>(i)] ==
                                           order[static_cast<std::size_t>(i)];
            }
            if (!identity) autos_.push_back(std::move(gamma));
        }
    }

    bool stabilizes(const std::vector<int>& gamma, const Partition& p) const {
        for (const Cell& c : p) {
            Bits128 m = cell_mask(c);
            for (int v : c)
                if (!m.test(gamma[static_cast<std::size_t>(v)])) return false;
        }
        return true;
    }

    // v can be skipped if some product of partition-stabilizing automorphisms
    // maps it onto a candidate already explored at this node.
    bool pruned(int v, const std::vector<int>& tried, const Partition& p) const {
        if (tried.empty() || autos_.empty()) return false;
        std::vector<const std::vector<int>*> stab;
        for (const auto& gamma : autos_)
            if (stabilizes(gamma, p)) stab.push_back(&gamma);
        if (stab.empty()) return false;
        Bits128 tried_mask;
        for (int u : tried) tried_mask.set(u);
        Bits128 reach;
        reach.set(v);
        std::vector<int> frontier{v};
        while (!frontier.empty()) {
            int u = frontier.back();
            frontier.pop_back();
            for (const auto* gamma : stab) {
                int w = (*gamma)[static_cast<std::size_t>(u)];
                if (tried_mask.test(w)) return true;
                if (!reach.test(w)) {
                    reach.set(w);
                    frontier.push_back(w);
                }
                // inverse image
                for (int x = 0; x < g_.n; ++x) {
                    if ((*gamma)[static_cast<std::size_t>(x)] == u) {
                        if (tried_mask.test(x)) return true;
                        if (!reach.test(x)) {
                            reach.set(x);
                            frontier.push_back(x);
                        }
                        break;
                    }
                }
            }
        }
        return false;
    }

    void search(Partition p) {
        refine(p);
        std::size_t target = p.size();
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1) { target = i; break; }
        if (target == p.size()) {
            handle_leaf(p);
            return;
        }
        std::vector<int> tried;
        const Cell cell = p[target];
        for (int v : cell) {
            if (pruned(v, tried, p)) continue;
            tried.push_back(v);
            Partition q;
            q.reserve(p.size() + 1);
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (j == target) {
                    q.push_back(Cell{v});
                    Cell rest;
                    for (int u : p[j])
                        if (u != v) rest.push_back(u);
                    q.push_back(std::move(rest));
                } else {
                    q.push_back(p[j]);
                }
            }
            search(std::move(q));
        }
    }

    static constexpr std::size_t kMaxAutos = 256;

    const ColoredGraph& g_;
    std::vector<std::vector<int>> autos_;
    std::vector<std::uint64_t> best_ser_;
    std::vector<int> best_order_;
    bool have_best_ = false;
};

inline void append_u16(std::vector<unsigned char>& bytes, std::size_t v) {
    bytes.push_back(static_cast<unsigned char>(v & 0xff));
    bytes.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

}  // namespace detail

inline CanonicalKey canonical_key(const Graph& g) {
    if (g.vertex_count() > kGraphIsoLimit)
        throw std::invalid_argument("canonical_key: graph exceeds size limit");
    detail::ColoredGraph cg;
    cg.n = g.vertex_count();
    cg.adj.resize(static_cast<std::size_t>(cg.n));
    cg.color.assign(static_cast<std::size_t>(cg.n), 0);
    for (auto [u, v] : g.edges()) {
        cg.adj[static_cast<std::size_t>(u)].set(v);
        cg.adj[static_cast<std::size_t>(v)].set(u);
    }
    std::vector<int> order = detail::Canonizer(cg).canonical_order();
    std::vector<int> pos(static_cast<std::size_t>(cg.n));
    for (int i = 0; i < cg.n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    std::vector<std::pair<int, int>> es;
    es.reserve(g.edges().size());
    for (auto [u, v] : g.edges()) {
        int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());

    CanonicalKey key;
    key.bytes.push_back('G');
    key.bytes.push_back(static_cast<unsigned char>(g.vertex_count()));
    detail::append_u16(key.bytes, es.size());
    for (auto [u, v] : es) {
        key.bytes.push_back(static_cast<unsigned char>(u));
        key.bytes.push_back(static_cast<unsigned char>(v));
    }
    return key;
}

inline CanonicalKey canonical_key(const Hypergraph& h) {
    if (h.vertex_count() > kHypergraphIsoLimit)
        throw std::invalid_argument("canonical_key: hypergraph exceeds size limit");
    int nv = h.vertex_count();
    int ne = h.edge_count();
    detail::ColoredGraph cg;
    cg.n = nv + ne;
    if (cg.n > 128) throw std::invalid_argument("canonical_key: hypergraph has too many edges");
    cg.adj.resize(static_cast<std::size_t>(cg.n));
    cg.color.resize(static_cast<std::size_t>(cg.n));
    for (int v = 0; v < nv; ++v) cg.color[static_cast<std::size_t>(v)] = 0;
    for (int i = 0; i < ne; ++i) {
        VertexSet e = h.edge_masks()[static_cast<std::size_t>(i)];
        int node = nv + i;
        cg.color[static_cast<std::size_t>(node)] = 1 + popcount(e);
        for_each_bit(e, [&](int v) {
            cg.adj[static_cast<std::size_t>(v)].set(node);
            cg.adj[static_cast<std::size_t>(node)].set(v);
        });
    }
    std::vector<int> order = detail::Canonizer(cg).canonical_order();
    std::vector<int> pos(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        // cells stay color-ordered, so vertex nodes hold the first nv slots
        int node = order[static_cast<std::size_t>(i)];
        if (node >= nv) throw std::logic_error("canonical_key: color ordering violated");
        pos[static_cast<std::size_t>(node)] = i;
    }

    std::vector<std::vector<int>> edges;
    edges.reserve(static_cast<std::size_t>(ne));
    for (VertexSet e : h.edge_masks()) {
        std::vector<int> lst;
        for_each_bit(e, [&](int v) { lst.push_back(pos[static_cast<std::size_t>(v)]); });
        std::sort(lst.begin(), lst.end());
        edges.push_back(std::move(lst));
    }
    std::sort(edges.begin(), edges.end());

    CanonicalKey key;
    key.bytes.push_back('H');
    key.bytes.push_back(static_cast<unsigned char>(nv));
    detail::append_u16(key.bytes, edges.size());
    for (const auto& e : edges) {
        key.bytes.push_back(static_cast<unsigned char>(e.size()));
        for (int v : e) key.bytes.push_back(static_cast<unsigned char>(v));
    }
    return key;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

inline bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

}  // namespace kncover
