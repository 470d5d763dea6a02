#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ech/gf2_oracle.hpp"
#include "ech/hypergraph.hpp"
#include "ech/rational.hpp"
#include "ech/rng.hpp"

namespace ech {

// +1 <-> 0 and -1 <-> 1, fixed project-wide.
using Sign = std::int8_t;

namespace bits {

// Generator rows live in F2^k packed into a word, bit (k-1-i) carrying the
// coefficient of message bit i; a row's integer value then reads as its
// bit string, so the i-th unit vector for k=3 is 100 -> 4.
inline std::uint64_t unit_mask(std::uint32_t i, std::uint32_t k) {
    return std::uint64_t{1} << (k - 1 - i);
}

inline std::uint64_t mask_from_signs(const std::vector<Sign>& x, std::uint32_t k) {
    std::uint64_t m = 0;
    for (std::uint32_t i = 0; i < k; ++i)
        if (x[i] < 0) m |= unit_mask(i, k);
    return m;
}

inline bool parity(std::uint64_t w) { return std::popcount(w) & 1; }

}  // namespace bits

// Linear code over F2, presented by one generator row per codeword bit:
// bit j of the encoding of x is (-1)^<rows[j], b(x)>. Rows are packed words,
// so k is capped at 64 (far beyond desk scale for these instances anyway).
struct LinearCodeSpec {
    std::uint32_t k = 0;
    std::uint32_t n = 0;
    std::vector<std::uint64_t> rows;
};

struct StrongLdcInstance {
    LinearCodeSpec code;
    std::vector<std::vector<std::array<Vertex, 3>>> matchings;  // one list per color
    Rational delta{0, 1};
};

inline std::vector<Sign> encode(const LinearCodeSpec& code, const std::vector<Sign>& x) {
    if (x.size() != code.k) throw std::invalid_argument("encode: message length mismatch");
    const std::uint64_t xm = bits::mask_from_signs(x, code.k);
    std::vector<Sign> out(code.n);
    for (std::uint32_t j = 0; j < code.n; ++j)
        out[j] = bits::parity(code.rows[j] & xm) ? Sign{-1} : Sign{1};
    return out;
}

// For linear codes, triple (j1,j2,j3) decodes x_i for every message iff the
// XOR of its three generator rows is the i-th unit vector.
inline bool verify_triple_linear(const LinearCodeSpec& code,
                                 const std::array<Vertex, 3>& triple, Color i) {
    std::uint64_t acc = 0;
    for (Vertex j : triple) {
        if (j >= code.n) throw std::out_of_range("verify_triple_linear: index out of range");
        acc ^= code.rows[j];
    }
    return acc == bits::unit_mask(i, code.k);
}

struct LdcReport {
    bool structural = true;
    bool decoding_algebraic = true;
    bool exhaustive_ran = false;
    bool decoding_exhaustive = true;
    bool degenerate = false;  // some matching empty (vacuously correct)
    std::vector<std::string> violations;

    bool ok() const {
        return structural && decoding_algebraic && (!exhaustive_ran || decoding_exhaustive);
    }
};

// Checks the strong-LDC conditions: per-color disjointness, minimum matching
// size ceil(delta*n), cross-color intersections <= 1, and the decoding rule.
// Decoding is checked algebraically on every triple, and additionally by full
// message enumeration when k <= exhaustive_limit; the two paths must agree.
inline LdcReport verify_strong_ldc(const StrongLdcInstance& inst,
                                   std::uint32_t exhaustive_limit = 12) {
    LdcReport rep;
    const auto& code = inst.code;
    const std::uint32_t k = code.k;
    if (inst.matchings.size() != k) {
        rep.structural = false;
        rep.violations.push_back("matching count differs from k");
        return rep;
    }
    if (code.rows.size() != code.n) {
        rep.structural = false;
        rep.violations.push_back("generator row count differs from n");
        return rep;
    }

    const std::uint64_t need =
        static_cast<std::uint64_t>((inst.delta * Rational{code.n, 1}).ceil_value());
    std::unordered_map<std::uint64_t, std::pair<Color, std::size_t>> pair_owner;
    for (Color i = 0; i < k; ++i) {
        const auto& mi = inst.matchings[i];
        if (mi.empty()) rep.degenerate = true;
        if (mi.size() < need) {
            rep.structural = false;
            rep.violations.push_back("matching " + std::to_string(i) +
                                     " smaller than ceil(delta*n)");
        }
        std::vector<bool> used(code.n, false);
        for (std::size_t t = 0; t < mi.size(); ++t) {
            const auto& tr = mi[t];
            if (tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2] ||
                tr[0] >= code.n || tr[1] >= code.n || tr[2] >= code.n) {
                rep.structural = false;
                rep.violations.push_back("malformed triple in matching " + std::to_string(i));
                continue;
            }
            for (Vertex v : tr) {
                if (used[v]) {
                    rep.structural = false;
                    rep.violations.push_back("matching " + std::to_string(i) +
                                             " triples overlap at vertex " + std::to_string(v));
                }
                used[v] = true;
            }
            // cross-color intersection <= 1 <=> no vertex pair reused
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    const auto key = detail::pair_key(tr[a], tr[b]);
                    auto [it, fresh] = pair_owner.try_emplace(key, std::make_pair(i, t));
                    if (!fresh && it->second.first != i) {
                        rep.structural = false;
                        rep.violations.push_back(
                            "triples in matchings " + std::to_string(it->second.first) + " and " +
                            std::to_string(i) + " intersect in 2 coordinates");
                    }
                }
        }
    }

    for (Color i = 0; i < k; ++i)
        for (const auto& tr : inst.matchings[i]) {
            if (tr[0] >= code.n || tr[1] >= code.n || tr[2] >= code.n) continue;
            if (!verify_triple_linear(code, tr, i)) {
                rep.decoding_algebraic = false;
                rep.violations.push_back("triple {" + std::to_string(tr[0]) + "," +
                                         std::to_string(tr[1]) + "," + std::to_string(tr[2]) +
                                         "} does not decode color " + std::to_string(i));
            }
        }

    if (k <= exhaustive_limit && k > 0) {
        rep.exhaustive_ran = true;
        std::vector<Sign> x(k, 1);
        for (std::uint64_t msg = 0; msg < (std::uint64_t{1} << k) && rep.decoding_exhaustive;
             ++msg) {
            for (std::uint32_t i = 0; i < k; ++i)
                x[i] = (msg >> (k - 1 - i)) & 1 ? Sign{-1} : Sign{1};
            const auto y = encode(code, x);
            for (Color i = 0; i < k && rep.decoding_exhaustive; ++i)
                for (const auto& tr : inst.matchings[i]) {
                    if (tr[0] >= code.n || tr[1] >= code.n || tr[2] >= code.n) continue;
                    if (y[tr[0]] * y[tr[1]] * y[tr[2]] != x[i]) {
                        rep.decoding_exhaustive = false;
                        rep.violations.push_back(
                            "triple in matching " + std::to_string(i) +
                            " fails on message mask " + std::to_string(msg));
                        break;
                    }
                }
        }
    }
    return rep;
}

// The union of the decoding matchings, colored by message index.
inline ColoredHypergraph recovery_hypergraph(const StrongLdcInstance& inst) {
    const auto rep = verify_strong_ldc(inst);
    if (!rep.ok()) {
        std::string msg = "recovery_hypergraph: instance failed verification";
        for (const auto& v : rep.violations) msg += "; " + v;
        throw std::invalid_argument(msg);
    }
    ColoredHypergraph h;
    h.n = inst.code.n;
    h.k = inst.code.k;
    for (Color i = 0; i < inst.code.k; ++i)
        for (const auto& tr : inst.matchings[i])
            h.edges.push_back(HyperEdge::of(tr[0], tr[1], tr[2], i));
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

// One randomized decode: queries the three positions of a uniformly chosen
// triple of M_i. Exact on uncorrupted codewords.
inline Sign local_decode(const StrongLdcInstance& inst, Color i,
                         const std::vector<Sign>& word, std::uint64_t rng_seed) {
    if (word.size() != inst.code.n) throw std::invalid_argument("local_decode: word length");
    if (i >= inst.matchings.size() || inst.matchings[i].empty())
        throw std::invalid_argument("local_decode: empty matching");
    Rng rng(rng_seed);
    const auto& tr = inst.matchings[i][rng.below(inst.matchings[i].size())];
    return static_cast<Sign>(word[tr[0]] * word[tr[1]] * word[tr[2]]);
}

}  // namespace ech
