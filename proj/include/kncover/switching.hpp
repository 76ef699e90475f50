#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kncover/counting.hpp"
#include "kncover/core.hpp"
#include "kncover/iso.hpp"

namespace kncover {

struct SwitchOutcome {
    Hypergraph result;
    PotentialValue f_before, f_after;
    std::optional<long long> i3_before, i3_after;
    int merged_duplicates = 0;
    bool changed = false;  // result not isomorphic to input
};

namespace detail {

inline void validate_pivot(const Hypergraph& h, const OrderedEdge& e0) {
    VertexSet seen = 0;
    for (int v : e0.vertices) {
        if (v < 0 || v >= h.vertex_count())
            throw std::invalid_argument("edge_switch: pivot vertex out of range");
        if ((seen >> v) & 1) throw std::invalid_argument("edge_switch: repeated pivot vertex");
        seen |= bit(v);
    }
    if (!h.has_edge(seen)) throw std::invalid_argument("edge_switch: pivot is not an edge");
}

inline std::vector<VertexSet> switched_edges(const Hypergraph& h, const OrderedEdge& e0,
                                             int* merged) {
    VertexSet pivot = e0.mask();
    std::vector<VertexSet> prefix(e0.vertices.size() + 1, 0);
    for (std::size_t i = 0; i < e0.vertices.size(); ++i)
        prefix[i + 1] = prefix[i] | bit(e0.vertices[i]);

    std::vector<VertexSet> out;
    out.reserve(h.edge_masks().size());
    out.push_back(pivot);
    for (VertexSet e : h.edge_masks()) {
        if (e == pivot) continue;
        VertexSet inter = e & pivot;
        out.push_back(inter == 0
                          ? e
                          : prefix[static_cast<std::size_t>(popcount(inter))] | (e & ~pivot));
    }
    std::sort(out.begin(), out.end(), set_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (merged) *merged = h.edge_count() - static_cast<int>(out.size());
    return out;
}

}  // namespace detail

/// Replace every edge adjacent to the pivot e0 = (v1..vn) by the first n_i
/// pivot vertices united with its part outside e0 (n_i = overlap size).
/// Collisions among the replacements are merged and counted.
inline SwitchOutcome edge_switch(const Hypergraph& h, const OrderedEdge& e0,
                                 bool with_counts = true) {
    detail::validate_pivot(h, e0);
    SwitchOutcome out;
    out.result = Hypergraph(h.vertex_count(), detail::switched_edges(h, e0, &out.merged_duplicates));
    out.f_before = potential_f(h);
    out.f_after = potential_f(out.result);
    if (with_counts) {
        out.i3_before = count_independent_sets(h, 3);
        out.i3_after = count_independent_sets(out.result, 3);
    }
    out.changed = !(out.result == h) && !are_isomorphic(h, out.result);
    return out;
}

/// Pivot order used throughout: nonincreasing degree, ties by vertex id.
inline OrderedEdge default_ordering(const Hypergraph& h, VertexSet e) {
    if (!h.has_edge(e)) throw std::invalid_argument("default_ordering: not an edge");
    OrderedEdge oe{bits_to_vector(e)};
    std::stable_sort(oe.vertices.begin(), oe.vertices.end(), [&](int a, int b) {
        int da = h.degree1(a), db = h.degree1(b);
        return da != db ? da > db : a < b;
    });
    return oe;
}

inline bool is_stable(const Hypergraph& h) {
    for (VertexSet e : h.edge_masks()) {
        SwitchOutcome out = edge_switch(h, default_ordering(h, e), /*with_counts=*/false);
        if (out.changed) return false;
    }
    return true;
}

struct StabilizeResult {
    Hypergraph result;
    int steps = 0;
    std::vector<PotentialValue> f_trace;  // initial f, then f after each change
};

namespace detail {

// f restricted to non-isolated vertices: positive, invariant support, and
// strictly decreasing on every class-changing switch. Termination guard.
inline PotentialValue positive_potential(const Hypergraph& h) {
    PotentialValue p = 1;
    for (int v = 0; v < h.vertex_count(); ++v) {
        int d = h.degree1(v);
        if (d > 0) p *= d;
    }
    return p;
}

}  // namespace detail

/// Repeated switching with default orderings, scanning edges in canonical
/// order and restarting after every class-changing step, until a full scan
/// changes nothing.
inline StabilizeResult stabilize(const Hypergraph& h) {
    StabilizeResult r{h, 0, {potential_f(h)}};
    PotentialValue guard = detail::positive_potential(r.result);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexSet e : r.result.edge_masks()) {
            SwitchOutcome out = edge_switch(r.result, default_ordering(r.result, e),
                                            /*with_counts=*/false);
            if (!out.changed) continue;
            PotentialValue next_guard = detail::positive_potential(out.result);
            if (!(next_guard < guard))
                throw std::runtime_error(
                    "stabilize: switching produced a non-isomorphic hypergraph without a "
                    "strict potential decrease; the asserted termination invariant fails "
                    "on this instance");
            guard = std::move(next_guard);
            r.result = std::move(out.result);
            r.f_trace.push_back(out.f_after);
            ++r.steps;
            changed = true;
            break;
        }
    }
    return r;
}

/// Classification of I_3 by pivot/deep-outside membership, on both sides of
/// a switch. S = pivot plus all adjacent edges; classes by |I cap e0| and
/// |I cap complement(S)|.
struct PartitionAudit {
    std::array<long long, 4> t_counts{};        // input side
    std::array<long long, 4> t_prime_counts{};  // switched side
    std::array<bool, 4> per_class_ok{};         // T1=,T2=,T3=,T4<=
    long long i3_before = 0, i3_after = 0;
    bool sums_match = false;
    int merged_duplicates = 0;
};

namespace detail {

inline std::array<long long, 4> classify_triples(const Hypergraph& h, VertexSet pivot,
                                                 VertexSet s_mask) {
    std::array<long long, 4> t{};
    int n = h.vertex_count();
    std::vector<VertexSet> conf = conflict_masks(h);
    VertexSet outside = full_set(n) & ~s_mask;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if ((conf[static_cast<std::size_t>(u)] >> v) & 1) continue;
            for (int w = v + 1; w < n; ++w) {
                if ((conf[static_cast<std::size_t>(u)] >> w) & 1) continue;
                if ((conf[static_cast<std::size_t>(v)] >> w) & 1) continue;
                VertexSet trio = bit(u) | bit(v) | bit(w);
                int in_pivot = popcount(trio & pivot);
                if (in_pivot == 0) {
                    ++t[0];
                } else {
                    int deep = popcount(trio & outside);
                    ++t[static_cast<std::size_t>(deep == 2 ? 1 : deep == 1 ? 2 : 3)];
                }
            }
        }
    return t;
}

}  // namespace detail

inline PartitionAudit partition_audit(const Hypergraph& h, const OrderedEdge& e0) {
    detail::validate_pivot(h, e0);
    VertexSet pivot = e0.mask();
    VertexSet s_mask = pivot;
    for (VertexSet e : h.edge_masks())
        if (e != pivot && (e & pivot)) s_mask |= e;

    PartitionAudit a;
    Hypergraph switched(h.vertex_count(), detail::switched_edges(h, e0, &a.merged_duplicates));
    a.t_counts = detail::classify_triples(h, pivot, s_mask);
    a.t_prime_counts = detail::classify_triples(switched, pivot, s_mask);
    a.per_class_ok = {a.t_counts[0] == a.t_prime_counts[0],
                      a.t_counts[1] == a.t_prime_counts[1],
                      a.t_counts[2] == a.t_prime_counts[2],
                      a.t_counts[3] <= a.t_prime_counts[3]};
    for (int i = 0; i < 4; ++i) {
        a.i3_before += a.t_counts[static_cast<std::size_t>(i)];
        a.i3_after += a.t_prime_counts[static_cast<std::size_t>(i)];
    }
    a.sums_match = a.i3_before == count_independent_sets(h, 3) &&
                   a.i3_after == count_independent_sets(switched, 3);
    return a;
}

/// The explicit unit-transfer sequence from the proof of the potential
/// inequality: before = nonincreasing pivot degree sequence, after = degrees
/// in pivot order post-switch. Each step moves one unit from the first
/// over-target index down the sequence; the product strictly drops per step.
struct MajorizationWitness {
    std::vector<long long> before, after;
    std::vector<std::pair<int, int>> steps;   // (m, s) indices, 0-based
    std::vector<PotentialValue> products;     // product trajectory, steps+1 long
};

inline MajorizationWitness majorization_witness(std::vector<long long> before,
                                                std::vector<long long> after) {
    if (before.size() != after.size())
        throw std::invalid_argument("majorization_witness: length mismatch");
    auto nonincreasing = [](const std::vector<long long>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i - 1] < v[i]) return false;
        return true;
    };
    if (!nonincreasing(before))
        throw std::invalid_argument("majorization_witness: before not nonincreasing");
    if (!nonincreasing(after))
        throw std::invalid_argument("majorization_witness: after not nonincreasing");
    long long prefix = 0;
    for (std::size_t i = 0; i < before.size(); ++i) {
        prefix += after[i] - before[i];
        if (prefix < 0)
            throw std::invalid_argument("majorization_witness: prefix-sum condition violated");
    }
    if (prefix != 0)
        throw std::invalid_argument("majorization_witness: totals differ");

    MajorizationWitness w;
    w.before = before;
    w.after = std::move(after);
    auto product = [](const std::vector<long long>& v) {
        PotentialValue p = 1;
        for (long long x : v) p *= x;
        return p;
    };
    std::vector<long long> y = std::move(before);
    w.products.push_back(product(y));
    while (true) {
        int m = -1, s = -1;
        for (std::size_t i = 0; i < y.size(); ++i) {
            long long alpha = w.after[i] - y[i];
            if (m < 0 && alpha != 0) m = static_cast<int>(i);
            if (s < 0 && alpha < 0) s = static_cast<int>(i);
        }
        if (m < 0) break;
        if (s < 0 || s <= m)
            throw std::logic_error("majorization_witness: transfer indices out of order");
        ++y[static_cast<std::size_t>(m)];
        --y[static_cast<std::size_t>(s)];
        w.steps.emplace_back(m, s);
        PotentialValue p = product(y);
        if (!(p < w.products.back()))
            throw std::logic_error("majorization_witness: product did not strictly decrease");
        w.products.push_back(std::move(p));
    }
    return w;
}

}  // namespace kncover
