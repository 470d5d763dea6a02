#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "ech/hypergraph.hpp"
#include "ech/rational.hpp"

namespace ech {

// Ordered pair of distinct hypergraph vertices.
struct SigVertex {
    Vertex first = 0;
    Vertex second = 0;

    friend bool operator==(const SigVertex& a, const SigVertex& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator<(const SigVertex& a, const SigVertex& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    }
};

struct SigVertexHash {
    std::size_t operator()(const SigVertex& v) const {
        return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(v.first) << 32) |
                                          v.second);
    }
};

// An edge of the signature graph: endpoints a < b, the unique causing vertex,
// and the cherry behind it. hyperedges[0] is the hyperedge pairing the first
// coordinates {a.first, b.first, cause}, hyperedges[1] the one pairing the
// second coordinates; colors[] is aligned with hyperedges[].
struct SigEdge {
    SigVertex a, b;
    Vertex cause = 0;
    std::array<std::uint32_t, 2> hyperedges{};
    std::array<Color, 2> colors{};

    SigVertex other(const SigVertex& x) const { return x == a ? b : a; }
    bool has_color(Color c) const { return colors[0] == c || colors[1] == c; }
};

struct SignatureGraph {
    const ColoredHypergraph* base = nullptr;
    std::vector<SigVertex> vertices;  // only pairs incident to >= 1 edge, sorted
    std::vector<SigEdge> edges;       // sorted by (a, b)
    std::unordered_map<SigVertex, std::vector<std::uint32_t>, SigVertexHash> incidence;

    std::size_t degree(const SigVertex& v) const {
        const auto it = incidence.find(v);
        return it == incidence.end() ? 0 : it->second.size();
    }
};

namespace detail {

inline void index_signature_graph(SignatureGraph& g) {
    std::sort(g.edges.begin(), g.edges.end(), [](const SigEdge& x, const SigEdge& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    g.incidence.clear();
    g.vertices.clear();
    for (std::uint32_t i = 0; i < g.edges.size(); ++i) {
        g.incidence[g.edges[i].a].push_back(i);
        g.incidence[g.edges[i].b].push_back(i);
    }
    g.vertices.reserve(g.incidence.size());
    for (const auto& [v, _] : g.incidence) g.vertices.push_back(v);
    std::sort(g.vertices.begin(), g.vertices.end());
}

}  // namespace detail

// Builds the signature graph: vertices are ordered pairs, and each cherry
// (two hyperedges meeting at w) causes exactly four edges. Linearity makes
// the causing vertex of an edge unique, so no two (w, cherry) choices ever
// produce the same edge. Rejects non-linear input.
inline SignatureGraph build_signature_graph(const ColoredHypergraph& h) {
    {
        const auto rep = validate(h);
        if (!rep.linear)
            throw std::invalid_argument("build_signature_graph: input is not linear");
    }
    SignatureGraph g;
    g.base = &h;

    std::vector<std::vector<std::uint32_t>> incident(h.n);
    for (std::uint32_t e = 0; e < h.edges.size(); ++e)
        for (Vertex v : h.edges[e].vertices) incident[v].push_back(e);

    auto others = [&](std::uint32_t e, Vertex w) {
        std::array<Vertex, 2> out{};
        int j = 0;
        for (Vertex v : h.edges[e].vertices)
            if (v != w) out[j++] = v;
        return out;  // sorted since the triple is sorted
    };

    for (Vertex w = 0; w < h.n; ++w) {
        const auto& inc = incident[w];
        for (std::size_t x = 0; x < inc.size(); ++x)
            for (std::size_t y = x + 1; y < inc.size(); ++y) {
                const std::uint32_t e1 = inc[x], e2 = inc[y];
                const auto [p, q] = others(e1, w);
                const auto [r, s] = others(e2, w);
                const Color c1 = h.edges[e1].color, c2 = h.edges[e2].color;
                auto emit = [&](Vertex u1, Vertex v1, Vertex u2, Vertex v2,
                                std::uint32_t hfirst, std::uint32_t hsecond, Color cfirst,
                                Color csecond) {
                    SigEdge e;
                    e.a = {u1, v1};
                    e.b = {u2, v2};
                    if (e.b < e.a) std::swap(e.a, e.b);
                    e.cause = w;
                    e.hyperedges = {hfirst, hsecond};
                    e.colors = {cfirst, csecond};
                    g.edges.push_back(e);
                };
                // e1's pair in the first coordinates, both alignments
                emit(p, r, q, s, e1, e2, c1, c2);
                emit(p, s, q, r, e1, e2, c1, c2);
                // and the swapped roles
                emit(r, p, s, q, e2, e1, c2, c1);
                emit(r, q, s, p, e2, e1, c2, c1);
            }
    }
    detail::index_signature_graph(g);
    return g;
}

// 4 * sum_v C(deg(v), 2): the exact number of signature-graph edges of a
// linear hypergraph, counted per causing vertex.
inline std::uint64_t exact_edge_count(const ColoredHypergraph& h) {
    std::vector<std::uint64_t> deg(h.n, 0);
    for (const auto& e : h.edges)
        for (Vertex v : e.vertices) ++deg[v];
    std::uint64_t total = 0;
    for (std::uint64_t d : deg) total += 4 * (d * (d - (d > 0 ? 1 : 0)) / 2);
    return total;
}

// ceil(12 * gamma^2 * n * k^2); only meaningful under gamma*k >= 1, which is
// what the derivation uses, so smaller gamma*k is refused.
inline std::uint64_t claim22_lower_bound(std::uint64_t n, std::uint64_t k,
                                         const Rational& gamma) {
    if (Rational{static_cast<std::int64_t>(k), 1} * gamma < Rational{1, 1})
        throw std::invalid_argument("claim22_lower_bound: requires gamma*k >= 1");
    const __int128 num = __int128{12} * gamma.num * gamma.num * n * k * k;
    const __int128 den = __int128{gamma.den} * gamma.den;
    return static_cast<std::uint64_t>((num + den - 1) / den);
}

// E(x, C): incident edges whose color pair meets C.
inline std::vector<std::uint32_t> color_incident_edges(const SignatureGraph& g,
                                                       const SigVertex& x,
                                                       const std::vector<Color>& colors) {
    std::vector<bool> in_c;
    for (Color c : colors) {
        if (c >= in_c.size()) in_c.resize(c + 1, false);
        in_c[c] = true;
    }
    auto hit = [&](Color c) { return c < in_c.size() && in_c[c]; };
    std::vector<std::uint32_t> out;
    const auto it = g.incidence.find(x);
    if (it == g.incidence.end()) return out;
    for (std::uint32_t ei : it->second) {
        const auto& e = g.edges[ei];
        if (hit(e.colors[0]) || hit(e.colors[1])) out.push_back(ei);
    }
    return out;
}

// H_J: every signature edge contributes both hyperedges of its cherry, with
// multiplicity. Total mass is 2|J|.
inline Augmentation subgraph_augmentation(const SignatureGraph& g,
                                          const std::vector<std::uint32_t>& edge_indices) {
    Augmentation a(*g.base);
    for (std::uint32_t ei : edge_indices) {
        if (ei >= g.edges.size())
            throw std::out_of_range("subgraph_augmentation: edge index out of range");
        a.add(g.edges[ei].hyperedges[0]);
        a.add(g.edges[ei].hyperedges[1]);
    }
    return a;
}

// J is rainbow iff the 2|J| hyperedge slots it contributes all carry
// distinct colors (which also rules out any repeated hyperedge).
inline bool is_rainbow(const SignatureGraph& g, const std::vector<std::uint32_t>& edge_indices) {
    std::vector<bool> seen;
    for (std::uint32_t ei : edge_indices)
        for (Color c : g.edges[ei].colors) {
            if (c >= seen.size()) seen.resize(c + 1, false);
            if (seen[c]) return false;
            seen[c] = true;
        }
    return true;
}

}  // namespace ech
