#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ech/hypergraph.hpp"

namespace ech {

// Packed bit vector over GF(2).
struct BitVec {
    std::size_t size = 0;
    std::vector<std::uint64_t> words;

    BitVec() = default;
    explicit BitVec(std::size_t n) : size(n), words((n + 63) / 64, 0) {}

    bool get(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (v)
            words[i >> 6] |= m;
        else
            words[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= o.words[w];
    }
    bool any() const {
        for (auto w : words)
            if (w) return true;
        return false;
    }
    // parity of <this, o>
    bool dot(const BitVec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words.size(); ++w) acc ^= words[w] & o.words[w];
        return std::popcount(acc) & 1;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words) c += std::popcount(w);
        return c;
    }
    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.size == b.size && a.words == b.words;
    }
    friend bool operator<(const BitVec& a, const BitVec& b) {
        if (a.size != b.size) return a.size < b.size;
        return a.words < b.words;
    }
};

// Dense bit matrix, row-major packed rows. All arithmetic mod 2.
struct BitMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BitVec> row;

    BitMatrix() = default;
    BitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), row(r, BitVec(c)) {}

    bool get(std::size_t r, std::size_t c) const { return row[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { row[r].set(c, v); }

    BitVec multiply(const BitVec& x) const {
        if (x.size != cols) throw std::invalid_argument("bitmatrix: size mismatch");
        BitVec y(rows);
        for (std::size_t r = 0; r < rows; ++r)
            if (row[r].dot(x)) y.set(r, true);
        return y;
    }
};

// Vertex-edge incidence matrix of H: entry (v, e) = 1 iff v is in edge e.
// Kernel vectors are exactly the even edge subsets.
inline BitMatrix incidence_matrix(const ColoredHypergraph& h) {
    BitMatrix m(h.n, h.edges.size());
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        for (Vertex v : h.edges[e].vertices) m.set(v, e, true);
    return m;
}

// Gaussian elimination, pivots chosen leftmost column first, lowest row
// first, so results (and downstream witnesses) are reproducible. Returns
// the pivot column per eliminated row via out-param style struct.
struct Elimination {
    std::vector<BitVec> reduced;          // RREF rows (nonzero only)
    std::vector<std::size_t> pivot_col;   // per reduced row
    std::size_t rank = 0;
};

inline Elimination eliminate(const BitMatrix& m) {
    Elimination el;
    std::vector<BitVec> work = m.row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < work.size(); ++c) {
        std::size_t piv = r;
        while (piv < work.size() && !work[piv].get(c)) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[r], work[piv]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != r && work[i].get(c)) work[i] ^= work[r];
        el.pivot_col.push_back(c);
        ++r;
    }
    el.rank = r;
    work.resize(r);
    el.reduced = std::move(work);
    return el;
}

inline std::size_t rank(const BitMatrix& m) { return eliminate(m).rank; }

// Basis of {z : M z = 0}; one vector per free column, dimension cols - rank.
inline std::vector<BitVec> kernel_basis(const BitMatrix& m) {
    const Elimination el = eliminate(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : el.pivot_col) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        BitVec z(m.cols);
        z.set(c, true);
        for (std::size_t r = 0; r < el.rank; ++r)
            if (el.reduced[r].get(c)) z.set(el.pivot_col[r], true);
        basis.push_back(std::move(z));
    }
    return basis;
}

struct ConditionTwoVerdict {
    bool holds = true;
    std::optional<Color> violating_color;
    std::optional<Augmentation> witness;  // 0/1 edge subset, even, odd in violating_color
};

namespace detail {
inline Augmentation subset_to_augmentation(const ColoredHypergraph& h, const BitVec& z) {
    Augmentation a(h);
    for (std::size_t e = 0; e < z.size; ++e)
        if (z.get(e)) a.mult.emplace(e, 1);
    return a;
}

inline std::vector<BitVec> color_indicators(const ColoredHypergraph& h) {
    std::vector<BitVec> chi(h.k, BitVec(h.edges.size()));
    for (std::size_t e = 0; e < h.edges.size(); ++e)
        if (h.edges[e].color < h.k) chi[h.edges[e].color].set(e, true);
    return chi;
}
}  // namespace detail

// Decides condition (ii): every even edge subset contains an even number of
// edges of each color. Since the color count of a kernel vector is linear
// over GF(2), checking every basis vector against every color indicator is
// exhaustive. On failure the offending basis vector is the witness; no
// minimization is attempted.
inline ConditionTwoVerdict check_condition_ii(const ColoredHypergraph& h) {
    const auto basis = kernel_basis(incidence_matrix(h));
    const auto chi = detail::color_indicators(h);
    for (const auto& z : basis)
        for (Color i = 0; i < h.k; ++i)
            if (chi[i].dot(z)) {
                ConditionTwoVerdict v;
                v.holds = false;
                v.violating_color = i;
                v.witness = detail::subset_to_augmentation(h, z);
                return v;
            }
    return {};
}

// Brute-force second oracle: walks all 2^m edge subsets in Gray-code order,
// maintaining the vertex-degree parity vector incrementally, and visits
// every subset whose degrees are all even (the empty set included).
// Refuses m > max_edges.
template <typename Visit>
void enumerate_even_subgraphs(const ColoredHypergraph& h, std::size_t max_edges,
                              Visit&& visit) {
    const std::size_t m = h.edges.size();
    if (m > max_edges || m >= 63)
        throw std::invalid_argument(
            "enumerate_even_subgraphs: " + std::to_string(m) + " edges exceeds limit " +
            std::to_string(max_edges));

    std::vector<BitVec> edge_mask;
    edge_mask.reserve(m);
    for (const auto& e : h.edges) {
        BitVec b(h.n);
        for (Vertex v : e.vertices) b.flip(v);  // flip tolerates repeated vertices
        edge_mask.push_back(std::move(b));
    }

    BitVec subset(m);
    BitVec parity(h.n);
    visit(static_cast<const BitVec&>(subset));  // empty set
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t g = 1; g < total; ++g) {
        const unsigned bit = std::countr_zero(g);  // Gray code: flip one edge
        subset.flip(bit);
        parity ^= edge_mask[bit];
        if (!parity.any()) visit(static_cast<const BitVec&>(subset));
    }
}

inline std::vector<BitVec> even_subgraphs(const ColoredHypergraph& h,
                                          std::size_t max_edges = 24) {
    std::vector<BitVec> out;
    enumerate_even_subgraphs(h, max_edges, [&](const BitVec& s) { out.push_back(s); });
    return out;
}

// Verdict derived purely from enumeration; used to cross-check
// check_condition_ii at small sizes.
inline ConditionTwoVerdict brute_force_condition_ii(const ColoredHypergraph& h,
                                                    std::size_t max_edges = 24) {
    const auto chi = detail::color_indicators(h);
    ConditionTwoVerdict verdict;
    enumerate_even_subgraphs(h, max_edges, [&](const BitVec& s) {
        if (!verdict.holds) return;
        for (Color i = 0; i < h.k; ++i)
            if (chi[i].dot(s)) {
                verdict.holds = false;
                verdict.violating_color = i;
                verdict.witness = detail::subset_to_augmentation(h, s);
                return;
            }
    });
    return verdict;
}

}  // namespace ech
