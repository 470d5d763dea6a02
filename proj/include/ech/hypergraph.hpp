#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ech/rational.hpp"

namespace ech {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

// A 3-uniform hyperedge carrying the index of the matching it belongs to.
// Vertices are kept sorted so triples compare canonically; construction does
// not reject malformed input (repeated or out-of-range vertices) -- that is
// validate()'s job, which reports them as findings instead of aborting.
struct HyperEdge {
    std::array<Vertex, 3> vertices{};
    Color color = 0;

    static HyperEdge of(Vertex a, Vertex b, Vertex c, Color col) {
        HyperEdge e{{a, b, c}, col};
        std::sort(e.vertices.begin(), e.vertices.end());
        return e;
    }
    bool contains(Vertex v) const {
        return vertices[0] == v || vertices[1] == v || vertices[2] == v;
    }
    friend bool operator==(const HyperEdge& a, const HyperEdge& b) {
        return a.vertices == b.vertices && a.color == b.color;
    }
    friend bool operator<(const HyperEdge& a, const HyperEdge& b) {
        if (a.vertices != b.vertices) return a.vertices < b.vertices;
        return a.color < b.color;
    }
};

// Edge-colored linear 3-uniform hypergraph on vertices [0, n) with colors
// [0, k). Color classes are intended to be matchings; validate() checks it.
struct ColoredHypergraph {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<HyperEdge> edges;

    friend bool operator==(const ColoredHypergraph& a, const ColoredHypergraph& b) {
        return a.n == b.n && a.k == b.k && a.edges == b.edges;
    }
};

struct Violation {
    std::string what;
    std::vector<std::size_t> edges;  // offending edge indices
};

struct ValidationReport {
    bool linear = true;
    bool matchings_ok = true;
    std::uint64_t min_matching_size = 0;
    Rational achieved_delta{0, 1};
    std::vector<Violation> violations;

    bool ok() const { return linear && matchings_ok; }
};

namespace detail {
inline std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}
}  // namespace detail

// Checks linearity (pairwise intersections <= 1, no duplicate triples, no
// malformed edges) and the matching property per color; when delta is given,
// additionally requires every color class to have >= ceil(delta*n) edges.
inline ValidationReport validate(const ColoredHypergraph& h,
                                 const Rational* delta = nullptr) {
    ValidationReport rep;
    const std::size_t m = h.edges.size();

    std::vector<std::size_t> well_formed;
    well_formed.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& e = h.edges[i];
        if (e.vertices[0] == e.vertices[1] || e.vertices[1] == e.vertices[2]) {
            rep.linear = false;
            rep.violations.push_back({"repeated vertex in triple", {i}});
            continue;
        }
        if (e.vertices[2] >= h.n) {
            rep.linear = false;
            rep.violations.push_back({"vertex out of range", {i}});
            continue;
        }
        if (e.color >= h.k) {
            rep.matchings_ok = false;
            rep.violations.push_back({"color out of range", {i}});
            continue;
        }
        well_formed.push_back(i);
    }

    // pair-occupancy map: each vertex pair may belong to at most one edge
    std::unordered_map<std::uint64_t, std::size_t> pair_owner;
    pair_owner.reserve(3 * well_formed.size());
    std::map<std::array<Vertex, 3>, std::size_t> triple_seen;
    for (std::size_t i : well_formed) {
        const auto& e = h.edges[i];
        if (auto [it, fresh] = triple_seen.try_emplace(e.vertices, i); !fresh) {
            rep.linear = false;
            rep.violations.push_back({"duplicate triple", {it->second, i}});
            continue;
        }
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                const auto key = detail::pair_key(e.vertices[a], e.vertices[b]);
                auto [it, fresh] = pair_owner.try_emplace(key, i);
                if (!fresh) {
                    rep.linear = false;
                    rep.violations.push_back(
                        {"edges share a vertex pair", {it->second, i}});
                }
            }
    }

    // matching property: same-color edges must be vertex-disjoint
    std::unordered_map<std::uint64_t, std::size_t> color_vertex_owner;
    std::vector<std::uint64_t> class_size(h.k, 0);
    for (std::size_t i : well_formed) {
        const auto& e = h.edges[i];
        ++class_size[e.color];
        for (Vertex v : e.vertices) {
            const auto key =
                (static_cast<std::uint64_t>(e.color) << 32) | v;
            auto [it, fresh] = color_vertex_owner.try_emplace(key, i);
            if (!fresh) {
                rep.matchings_ok = false;
                rep.violations.push_back(
                    {"same-color edges overlap", {it->second, i}});
            }
        }
    }

    rep.min_matching_size = h.k == 0
                                ? 0
                                : *std::min_element(class_size.begin(), class_size.end());
    rep.achieved_delta =
        h.n == 0 ? Rational{0, 1}
                 : Rational{static_cast<std::int64_t>(rep.min_matching_size),
                            static_cast<std::int64_t>(h.n)};

    if (delta != nullptr) {
        const std::uint64_t need =
            static_cast<std::uint64_t>((*delta * Rational{h.n, 1}).ceil_value());
        for (Color c = 0; c < h.k; ++c)
            if (class_size[c] < need) {
                rep.matchings_ok = false;
                rep.violations.push_back(
                    {"color " + std::to_string(c) + " matching smaller than ceil(delta*n)=" +
                         std::to_string(need),
                     {}});
            }
    }
    return rep;
}

// Multiset of a hypergraph's edges; multiplicities are exact counts, with
// parity taken only by an explicit mod2_reduce(). Zero entries are absent.
struct Augmentation {
    const ColoredHypergraph* base = nullptr;
    std::map<std::size_t, std::uint64_t> mult;

    explicit Augmentation(const ColoredHypergraph& h) : base(&h) {}

    void add(std::size_t edge_index, std::uint64_t count = 1) {
        if (edge_index >= base->edges.size())
            throw std::out_of_range("augmentation: edge index out of range");
        if (count == 0) return;
        mult[edge_index] += count;
    }
    void set(std::size_t edge_index, std::uint64_t count) {
        if (edge_index >= base->edges.size())
            throw std::out_of_range("augmentation: edge index out of range");
        if (count == 0)
            mult.erase(edge_index);
        else
            mult[edge_index] = count;
    }
    std::uint64_t multiplicity(std::size_t edge_index) const {
        const auto it = mult.find(edge_index);
        return it == mult.end() ? 0 : it->second;
    }
    std::uint64_t total_mass() const {
        std::uint64_t s = 0;
        for (const auto& [e, c] : mult) s += c;
        return s;
    }
};

// deg_A(v): multiplicity-weighted degree.
inline std::uint64_t degree(const Augmentation& a, Vertex v) {
    if (v >= a.base->n) throw std::out_of_range("degree: vertex out of range");
    std::uint64_t d = 0;
    for (const auto& [e, c] : a.mult)
        if (a.base->edges[e].contains(v)) d += c;
    return d;
}

// true iff every vertex degree is even.
inline bool is_even(const Augmentation& a) {
    std::unordered_map<Vertex, std::uint64_t> deg;
    for (const auto& [e, c] : a.mult)
        for (Vertex v : a.base->edges[e].vertices) deg[v] += c;
    for (const auto& [v, d] : deg)
        if (d % 2 != 0) return false;
    return true;
}

// lambda_A(i): total multiplicity of color-i edges.
inline std::uint64_t color_multiplicity(const Augmentation& a, Color i) {
    std::uint64_t s = 0;
    for (const auto& [e, c] : a.mult)
        if (a.base->edges[e].color == i) s += c;
    return s;
}

// Replaces every multiplicity by its parity; preserves is_even and the
// parity of every color multiplicity.
inline Augmentation mod2_reduce(const Augmentation& a) {
    Augmentation r(*a.base);
    for (const auto& [e, c] : a.mult)
        if (c % 2 != 0) r.mult.emplace(e, 1);
    return r;
}

}  // namespace ech
