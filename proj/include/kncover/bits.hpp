#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace kncover {

// Vertex sets of graphs/hypergraphs fit in one word (vertex ids < 64).
using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return std::popcount(s); }

inline int lowest_bit(VertexSet s) { return std::countr_zero(s); }

inline VertexSet bit(int v) { return VertexSet{1} << v; }

inline VertexSet full_set(int n) {
    return n == 0 ? 0 : (~VertexSet{0} >> (64 - n));
}

template <typename Fn>
inline void for_each_bit(VertexSet s, Fn&& fn) {
    while (s) {
        fn(lowest_bit(s));
        s &= s - 1;
    }
}

inline std::vector<int> bits_to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(s)));
    for_each_bit(s, [&](int v) { out.push_back(v); });
    return out;
}

inline VertexSet vector_to_bits(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= bit(v);
    return s;
}

// Compares masks as ascending vertex lists (lexicographic, shorter prefix first).
inline bool set_lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int x = lowest_bit(a), y = lowest_bit(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Wide bitset for the canonical-labeling engine (graph nodes + hyperedge nodes).
struct Bits128 {
    std::uint64_t lo = 0, hi = 0;

    void set(int i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const {
        return ((i < 64 ? lo : hi) >> (i & 63)) & 1;
    }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    friend Bits128 operator&(Bits128 a, Bits128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend bool operator==(const Bits128&, const Bits128&) = default;
};

}  // namespace kncover
