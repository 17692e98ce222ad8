#pragma once

// Symmetric Hadamard matrices (Sylvester and Paley type II) and families of
// pairwise-orthogonal +-1 vectors drawn from their rows.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmspec/common.hpp"
#include "pmspec/int_matrix.hpp"

namespace pmspec {

// Symmetric +-1 matrix with H*H^T = n*I, checked exactly at construction.
class HadamardMatrix {
public:
    explicit HadamardMatrix(PmOneMatrix m) : m_(std::move(m)) {
        const IntMatrix sq = mat_pow(m_.sym(), 2);
        const IntMatrix want = mat_scale(IntMatrix::identity(m_.order()), m_.order());
        if (sq != want) throw precondition_error("HadamardMatrix: H*H^T != n*I");
    }

    i64 order() const { return m_.order(); }
    i64 operator()(i64 i, i64 j) const { return m_(i, j); }
    const PmOneMatrix& pm() const { return m_; }

private:
    PmOneMatrix m_;
};

// m-fold Kronecker power of [[1,1],[1,-1]]; order 2^m, symmetric, already
// normalized (first row and column all ones).
inline HadamardMatrix sylvester(int m) {
    if (m < 0) throw precondition_error("sylvester: exponent must be nonnegative");
    if (m > 15) throw overflow_error("sylvester: order 2^" + std::to_string(m) + " beyond supported range");
    IntSymMatrix h = IntSymMatrix::ones(1);
    const IntSymMatrix h2 = IntSymMatrix::from_rows({{1, 1}, {1, -1}});
    for (int i = 0; i < m; ++i) h = kron(h, h2);
    return HadamardMatrix(PmOneMatrix(std::move(h)));
}

namespace had_detail {

// Quadratic-character value over GF(q), q an odd prime.
inline i64 legendre(i64 a, i64 q) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) return 0;
    i64 r = 1, base = a, e = (q - 1) / 2;
    while (e) {
        if (e & 1) r = (r * base) % q;
        base = (base * base) % q;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

} // namespace had_detail

// Paley type II: q prime with q = 1 (mod 4) gives a symmetric Hadamard matrix
// of order 2(q+1), assembled from the symmetric conference matrix of the
// quadratic-residue (Jacobsthal) matrix over GF(q).
inline HadamardMatrix paley2(i64 q) {
    if (!is_prime(q)) throw precondition_error("paley2: q = " + std::to_string(q) + " is not prime");
    if (q % 4 != 1) throw precondition_error("paley2: q must be 1 mod 4, got " + std::to_string(q));

    const i64 c = q + 1;
    IntMatrix conf(c, c, 0);
    for (i64 j = 1; j < c; ++j) {
        conf(0, j) = 1;
        conf(j, 0) = 1;
    }
    for (i64 i = 0; i < q; ++i)
        for (i64 j = 0; j < q; ++j) conf(i + 1, j + 1) = had_detail::legendre(j - i, q);

    const IntMatrix h2 = IntSymMatrix::from_rows({{1, 1}, {1, -1}}).mat();
    const IntMatrix k2 = IntSymMatrix::from_rows({{1, -1}, {-1, -1}}).mat();
    const IntMatrix h = mat_add(kron(conf, h2), kron(IntMatrix::identity(c), k2));
    return HadamardMatrix(PmOneMatrix(IntSymMatrix(h)));
}

// Symmetric normalization: simultaneous row/column sign changes (and, when the
// top-left diagonal entry is -1, a diagonal-preserving swap or a global
// negation) so that the first row and the first column are all ones. Both
// moves preserve symmetry and the Hadamard property.
inline HadamardMatrix normalize(const HadamardMatrix& h) {
    const i64 n = h.order();
    IntMatrix m(n, n);
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) m(i, j) = h(i, j);

    if (m(0, 0) == -1) {
        i64 pivot = -1;
        for (i64 i = 1; i < n; ++i)
            if (m(i, i) == 1) { pivot = i; break; }
        if (pivot >= 0) {
            for (i64 j = 0; j < n; ++j) std::swap(m(0, j), m(pivot, j));
            for (i64 i = 0; i < n; ++i) std::swap(m(i, 0), m(i, pivot));
        } else {
            // all-diagonal -1: no signed permutation can fix entry (0,0)
            for (i64 i = 0; i < n; ++i)
                for (i64 j = 0; j < n; ++j) m(i, j) = -m(i, j);
        }
    }
    std::vector<i64> s(static_cast<std::size_t>(n));
    for (i64 j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = m(0, j);
    IntMatrix r(n, n);
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j)
            r(i, j) = s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)] * m(i, j);
    return HadamardMatrix(PmOneMatrix(IntSymMatrix(std::move(r))));
}

struct OrthFamily {
    i64 dimension = 0;
    std::vector<std::vector<i64>> vectors;
    bool includes_allones = false;
    std::string source; // catalog id of the Hadamard matrix the rows came from
};

namespace had_detail {

struct CatalogEntry {
    i64 order;
    std::string id;
};

// Normalized symmetric Hadamard orders available for row harvesting: Sylvester
// powers of two and Paley-II orders 2(q+1), q prime, q = 1 mod 4.
inline std::vector<CatalogEntry> catalog(i64 cap = 1024) {
    std::vector<CatalogEntry> entries;
    for (int m = 0; (i64{1} << m) <= cap; ++m)
        entries.push_back({i64{1} << m, "sylvester(" + std::to_string(m) + ")"});
    for (i64 q = 5; 2 * (q + 1) <= cap; q += 4)
        if (is_prime(q)) entries.push_back({2 * (q + 1), "paley2(" + std::to_string(q) + ")"});
    std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return a.order != b.order ? a.order < b.order : a.id < b.id;
    });
    return entries;
}

inline HadamardMatrix realize(const CatalogEntry& e) {
    if (e.id.rfind("sylvester", 0) == 0) {
        int m = 0;
        while ((i64{1} << m) < e.order) ++m;
        return sylvester(m);
    }
    const i64 q = e.order / 2 - 1;
    return normalize(paley2(q));
}

} // namespace had_detail

// s pairwise-orthogonal +-1 vectors from the smallest admissible normalized
// Hadamard matrix in the catalog. With include_allones the all-ones vector is
// the first member (rows 0..s-1, needing order >= s); without it every vector
// must also be orthogonal to the all-ones vector, so the first row is excluded
// and the last s rows of an order >= s+1 matrix are taken.
inline OrthFamily orth_family(i64 s, bool include_allones, std::optional<i64> forced_order = {},
                              i64 order_floor = 1) {
    if (s < 1) throw precondition_error("orth_family: s must be positive");
    i64 need = include_allones ? s : s + 1;
    if (!forced_order && order_floor > need) need = order_floor;
    const auto cat = had_detail::catalog();
    const had_detail::CatalogEntry* chosen = nullptr;
    for (const auto& e : cat) {
        if (e.order < need) continue;
        if (forced_order && e.order != *forced_order) continue;
        chosen = &e;
        break;
    }
    if (!chosen) {
        if (forced_order)
            throw precondition_error("orth_family: no catalog Hadamard matrix of order " +
                                     std::to_string(*forced_order) + " admits " + std::to_string(s) +
                                     (include_allones ? " rows" : " rows orthogonal to the all-ones vector"));
        throw precondition_error("orth_family: no catalog order available for s = " + std::to_string(s));
    }
    const HadamardMatrix h = had_detail::realize(*chosen);
    OrthFamily fam;
    fam.dimension = chosen->order;
    fam.includes_allones = include_allones;
    fam.source = chosen->id;
    const i64 n = chosen->order;
    for (i64 r = 0; r < s; ++r) {
        const i64 row = include_allones ? r : n - s + r;
        std::vector<i64> v(static_cast<std::size_t>(n));
        for (i64 j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = h(row, j);
        fam.vectors.push_back(std::move(v));
    }
    return fam;
}

} // namespace pmspec
