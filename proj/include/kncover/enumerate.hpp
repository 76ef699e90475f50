#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "kncover/core.hpp"
#include "kncover/iso.hpp"

namespace kncover {

inline constexpr int kEnumerateLimit = 9;

/// One representative per isomorphism class on N vertices, in canonical-key
/// order. Built level by level: every class on k+1 vertices arises from some
/// class representative on k vertices plus one new vertex, so extending every
/// representative by every neighborhood subset and deduplicating by exact
/// canonical key is complete.
inline std::vector<Graph> enumerate_graphs(int N) {
    if (N < 0 || N > kEnumerateLimit)
        throw std::invalid_argument("enumerate_graphs: N out of range [0,9]");
    std::map<CanonicalKey, Graph> level;
    level.emplace(canonical_key(Graph::empty_graph(0)), Graph::empty_graph(0));
    for (int k = 0; k < N; ++k) {
        std::map<CanonicalKey, Graph> next;
        for (const auto& [key, g] : level) {
            for (VertexSet sub = 0; sub < (VertexSet{1} << k); ++sub) {
                std::vector<std::pair<int, int>> es = g.edges();
                for_each_bit(sub, [&](int v) { es.emplace_back(v, k); });
                Graph extended(k + 1, std::move(es));
                CanonicalKey ck = canonical_key(extended);
                next.try_emplace(std::move(ck), std::move(extended));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (auto& [key, g] : level) out.push_back(std::move(g));
    return out;
}

/// Shared cache for the sizes the verifiers hit repeatedly.
inline std::shared_ptr<const std::vector<Graph>> enumerate_graphs_cached(int N) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const std::vector<Graph>>> cache;
    if (N > 8) return std::make_shared<const std::vector<Graph>>(enumerate_graphs(N));
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    auto ptr = std::make_shared<const std::vector<Graph>>(enumerate_graphs(N));
    cache.emplace(N, ptr);
    return ptr;
}

}  // namespace kncover
