#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ech/colored_graph.hpp"
#include "ech/hypergraph.hpp"
#include "ech/ldc.hpp"
#include "ech/rng.hpp"

namespace ech {

struct GenConfig {
    std::uint64_t seed = 0;
    std::optional<Rational> target_delta;  // retry until reached, when set
    std::uint32_t attempts = 16;
};

struct GenError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// One greedy pass: per color i, triples {a,b,c} with a^b^c = unit(i), vertices
// disjoint within the color, and no vertex pair reused anywhere (linearity
// across colors). Returns matchings, possibly with empty colors.
inline std::vector<std::vector<std::array<Vertex, 3>>> hadamard_greedy(std::uint32_t k,
                                                                       Rng& rng) {
    const std::uint32_t n = std::uint32_t{1} << k;
    std::vector<std::vector<std::array<Vertex, 3>>> matchings(k);
    std::unordered_set<std::uint64_t> pair_used;
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;

    for (Color i = 0; i < k; ++i) {
        const std::uint64_t unit = bits::unit_mask(i, k);
        std::vector<bool> used(n, false);
        rng.shuffle(order);
        for (Vertex a : order) {
            if (used[a] || a == unit) continue;
            // a few random partners; c is then forced by the XOR identity
            for (int tries = 0; tries < 48; ++tries) {
                const Vertex b = static_cast<Vertex>(rng.below(n));
                if (b == a || b == unit || used[b]) continue;
                const Vertex c = static_cast<Vertex>(a ^ b ^ unit);
                if (c == a || c == b || used[c]) continue;
                if (pair_used.count(pair_key(a, b)) || pair_used.count(pair_key(a, c)) ||
                    pair_used.count(pair_key(b, c)))
                    continue;
                matchings[i].push_back(HyperEdge::of(a, b, c, i).vertices);
                used[a] = used[b] = used[c] = true;
                pair_used.insert(pair_key(a, b));
                pair_used.insert(pair_key(a, c));
                pair_used.insert(pair_key(b, c));
                break;
            }
        }
        std::sort(matchings[i].begin(), matchings[i].end());
    }
    return matchings;
}

inline Rational min_matching_delta(
    const std::vector<std::vector<std::array<Vertex, 3>>>& matchings, std::uint32_t n) {
    std::size_t mn = matchings.empty() ? 0 : matchings[0].size();
    for (const auto& m : matchings) mn = std::min(mn, m.size());
    return Rational{static_cast<std::int64_t>(mn), static_cast<std::int64_t>(n)};
}

}  // namespace detail

// Strong LDC on the Hadamard code: generator rows are all vectors of F2^k,
// so vertex j carries row j and a triple decodes x_i iff its ids XOR to the
// i-th unit mask. Matchings are grown greedily under a global pair-occupancy
// set; the achieved delta is whatever the greedy run reaches.
inline StrongLdcInstance hadamard_strong_ldc(std::uint32_t k, const GenConfig& cfg) {
    if (k < 2 || k > 20) throw std::invalid_argument("hadamard_strong_ldc: k must be in [2,20]");
    const std::uint32_t n = std::uint32_t{1} << k;

    std::string last_failure;
    for (std::uint32_t attempt = 0; attempt < cfg.attempts; ++attempt) {
        Rng rng(Rng::mix(cfg.seed, attempt));
        auto matchings = detail::hadamard_greedy(k, rng);

        bool empty_color = false;
        for (const auto& m : matchings) empty_color |= m.empty();
        if (empty_color) {
            last_failure = "a color's matching came out empty";
            continue;
        }
        const Rational achieved = detail::min_matching_delta(matchings, n);
        if (cfg.target_delta && achieved < *cfg.target_delta) {
            last_failure = "achieved delta " + achieved.str() + " below target";
            continue;
        }

        StrongLdcInstance inst;
        inst.code.k = k;
        inst.code.n = n;
        inst.code.rows.resize(n);
        for (std::uint32_t j = 0; j < n; ++j) inst.code.rows[j] = j;
        inst.matchings = std::move(matchings);
        inst.delta = achieved;
        if (const auto rep = verify_strong_ldc(inst); !rep.ok())
            throw std::logic_error("hadamard_strong_ldc: generated instance failed verification");
        return inst;
    }
    throw GenError("hadamard_strong_ldc: k=" + std::to_string(k) + ": " + last_failure +
                   " after " + std::to_string(cfg.attempts) + " attempts");
}

// The k-dimensional hypercube with dimension colors: color i matches v with
// v ^ unit(i). Every cycle returns to its start, so it crosses each dimension
// an even number of times -- the canonical consistent two-query instance.
inline ColoredGraph hypercube_two_query_instance(std::uint32_t k) {
    if (k < 1 || k > 20) throw std::invalid_argument("hypercube: k must be in [1,20]");
    ColoredGraph g;
    g.n = std::uint32_t{1} << k;
    g.k = k;
    for (Color i = 0; i < k; ++i) {
        const std::uint32_t bit = std::uint32_t{1} << (k - 1 - i);
        for (Vertex v = 0; v < g.n; ++v)
            if (!(v & bit)) g.edges.push_back(ColoredGraph::Edge::of(v, v | bit, i));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Minimal condition-(ii) violator: four triples on six vertices, each vertex
// in exactly two of them, one color each. The full edge set is even with
// every color count odd.
inline ColoredHypergraph planted_violation_instance() {
    ColoredHypergraph h;
    h.n = 6;
    h.k = 4;
    h.edges = {
        HyperEdge::of(0, 1, 2, 0),
        HyperEdge::of(0, 3, 4, 1),
        HyperEdge::of(1, 3, 5, 2),
        HyperEdge::of(2, 4, 5, 3),
    };
    return h;
}

// Random linear instance meeting condition (i) for the given delta: each
// color gets exactly ceil(delta*n) disjoint triples, grown greedily with a
// global pair-occupancy set. Condition (ii) is deliberately not enforced.
inline ColoredHypergraph random_colored_hypergraph(std::uint32_t n, std::uint32_t k,
                                                   const Rational& delta,
                                                   const GenConfig& cfg) {
    if (n == 0 || k == 0) throw std::invalid_argument("random_colored_hypergraph: n, k >= 1");
    const std::uint64_t t =
        static_cast<std::uint64_t>((delta * Rational{n, 1}).ceil_value());
    if (3 * t * k > static_cast<std::uint64_t>(n) * k)
        throw std::invalid_argument("random_colored_hypergraph: infeasible delta (3*ceil(delta*n) > n)");

    for (std::uint32_t attempt = 0; attempt < cfg.attempts; ++attempt) {
        Rng rng(Rng::mix(cfg.seed, attempt));
        std::unordered_set<std::uint64_t> pair_used;
        ColoredHypergraph h;
        h.n = n;
        h.k = k;
        bool failed = false;
        for (Color i = 0; i < k && !failed; ++i) {
            std::vector<bool> used(n, false);
            std::uint64_t made = 0;
            std::uint64_t budget = 400 * (t + 1);
            while (made < t && budget-- > 0) {
                const Vertex a = static_cast<Vertex>(rng.below(n));
                const Vertex b = static_cast<Vertex>(rng.below(n));
                const Vertex c = static_cast<Vertex>(rng.below(n));
                if (a == b || a == c || b == c || used[a] || used[b] || used[c]) continue;
                if (pair_used.count(detail::pair_key(a, b)) ||
                    pair_used.count(detail::pair_key(a, c)) ||
                    pair_used.count(detail::pair_key(b, c)))
                    continue;
                h.edges.push_back(HyperEdge::of(a, b, c, i));
                used[a] = used[b] = used[c] = true;
                pair_used.insert(detail::pair_key(a, b));
                pair_used.insert(detail::pair_key(a, c));
                pair_used.insert(detail::pair_key(b, c));
                ++made;
            }
            failed = made < t;
        }
        if (failed) continue;
        std::sort(h.edges.begin(), h.edges.end());
        if (!validate(h, &delta).ok())
            throw std::logic_error("random_colored_hypergraph: generated instance failed validation");
        return h;
    }
    throw GenError("random_colored_hypergraph: budget exhausted for n=" + std::to_string(n) +
                   " k=" + std::to_string(k) + " delta=" + delta.str());
}

}  // namespace ech
