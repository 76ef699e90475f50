#pragma once

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kncover/core.hpp"

namespace kncover {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
};

using GraphOrHypergraph = std::variant<Graph, Hypergraph>;

namespace detail {

inline bool next_content_line(std::istream& in, std::string& out, int& line_no) {
    while (std::getline(in, out)) {
        ++line_no;
        std::size_t i = out.find_first_not_of(" \t\r\n");
        if (i != std::string::npos) return true;
    }
    return false;
}

inline std::vector<long long> parse_ints(const std::string& s, int line_no) {
    std::istringstream is(s);
    std::vector<long long> out;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        long long v = 0;
        bool ok = true;
        try {
            v = std::stoll(tok, &used);
        } catch (...) {
            ok = false;
        }
        if (!ok || used != tok.size())
            throw ParseError(line_no, "unexpected token '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace detail

/// `graph N M` then M lines `u v` with 0 <= u < v < N.
inline Graph parse_graph_body(std::istream& in, long long N, long long M, int& line_no) {
    if (N < 0 || N > kMaxVertices) throw ParseError(line_no, "vertex count out of range");
    if (M < 0) throw ParseError(line_no, "negative edge count");
    std::vector<std::pair<int, int>> edges;
    std::string line;
    for (long long i = 0; i < M; ++i) {
        if (!detail::next_content_line(in, line, line_no))
            throw ParseError(line_no + 1, "expected an edge line");
        auto vals = detail::parse_ints(line, line_no);
        if (vals.size() != 2) throw ParseError(line_no, "expected 'u v'");
        long long u = vals[0], v = vals[1];
        if (!(0 <= u && u < v && v < N))
            throw ParseError(line_no, "edge endpoints must satisfy 0 <= u < v < N");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph(static_cast<int>(N), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

/// `hypergraph N M` then M lines `k v1 ... vk`, vertex ids strictly increasing.
inline Hypergraph parse_hypergraph_body(std::istream& in, long long N, long long M,
                                        int& line_no) {
    if (N < 0 || N > kMaxVertices) throw ParseError(line_no, "vertex count out of range");
    if (M < 0) throw ParseError(line_no, "negative edge count");
    std::vector<std::vector<int>> edges;
    std::string line;
    for (long long i = 0; i < M; ++i) {
        if (!detail::next_content_line(in, line, line_no))
            throw ParseError(line_no + 1, "expected an edge line");
        auto vals = detail::parse_ints(line, line_no);
        if (vals.empty()) throw ParseError(line_no, "expected 'k v1 ... vk'");
        long long k = vals[0];
        if (k < 1) throw ParseError(line_no, "edge size must be >= 1");
        if (static_cast<long long>(vals.size()) != k + 1)
            throw ParseError(line_no, "edge line does not match its declared size");
        std::vector<int> edge;
        for (long long j = 1; j <= k; ++j) {
            long long v = vals[static_cast<std::size_t>(j)];
            if (v < 0 || v >= N) throw ParseError(line_no, "vertex id out of range");
            if (j > 1 && v <= vals[static_cast<std::size_t>(j - 1)])
                throw ParseError(line_no, "vertex ids must be strictly increasing");
            edge.push_back(static_cast<int>(v));
        }
        edges.push_back(std::move(edge));
    }
    try {
        return Hypergraph(static_cast<int>(N), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

inline GraphOrHypergraph parse_object(std::istream& in) {
    int line_no = 0;
    std::string line;
    if (!detail::next_content_line(in, line, line_no)) throw ParseError(1, "empty input");
    std::istringstream head(line);
    std::string kind;
    long long N = -1, M = -1;
    head >> kind >> N >> M;
    if (head.fail()) throw ParseError(line_no, "expected '<kind> N M'");
    if (kind == "graph") return parse_graph_body(in, N, M, line_no);
    if (kind == "hypergraph") return parse_hypergraph_body(in, N, M, line_no);
    throw ParseError(line_no, "unknown object kind '" + kind + "'");
}

inline Graph parse_graph(std::istream& in) {
    auto obj = parse_object(in);
    if (auto* g = std::get_if<Graph>(&obj)) return *g;
    throw ParseError(1, "expected a graph, got a hypergraph");
}

inline Hypergraph parse_hypergraph(std::istream& in) {
    auto obj = parse_object(in);
    if (auto* h = std::get_if<Hypergraph>(&obj)) return *h;
    throw ParseError(1, "expected a hypergraph, got a graph");
}

inline std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << "graph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

inline std::string format_hypergraph(const Hypergraph& h) {
    std::ostringstream os;
    os << "hypergraph " << h.vertex_count() << " " << h.edge_count() << "\n";
    for (const auto& e : h.edge_lists()) {
        os << e.size();
        for (int v : e) os << " " << v;
        os << "\n";
    }
    return os.str();
}

}  // namespace kncover
