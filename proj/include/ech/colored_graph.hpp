#pragma once

#include <algorithm>
#include <cstdint>
#include <tuple>
#include <vector>

#include "ech/hypergraph.hpp"

namespace ech {

// Edge-colored 2-uniform graph: the two-query warm-up object. Color classes
// are matchings just as in the 3-uniform case.
struct ColoredGraph {
    struct Edge {
        Vertex u = 0, v = 0;  // u < v
        Color color = 0;

        static Edge of(Vertex a, Vertex b, Color c) {
            if (a > b) std::swap(a, b);
            return {a, b, c};
        }
        friend bool operator==(const Edge& x, const Edge& y) {
            return x.u == y.u && x.v == y.v && x.color == y.color;
        }
        friend bool operator<(const Edge& x, const Edge& y) {
            return std::tie(x.u, x.v, x.color) < std::tie(y.u, y.v, y.color);
        }
    };

    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<Edge> edges;
};

// true iff every color class is a matching and all endpoints are in range.
inline bool is_matching_union(const ColoredGraph& g) {
    std::vector<std::vector<bool>> used(g.k, std::vector<bool>(g.n, false));
    for (const auto& e : g.edges) {
        if (e.u == e.v || e.v >= g.n || e.color >= g.k) return false;
        if (used[e.color][e.u] || used[e.color][e.v]) return false;
        used[e.color][e.u] = used[e.color][e.v] = true;
    }
    return true;
}

}  // namespace ech
