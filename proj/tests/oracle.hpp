#pragma once

// Test-only oracles, kept independent of the library's Jacobi solver so the
// two can check each other.
//
//  - oracle_eigen_desc: eigenvalues by Sylvester inertia slicing (negative
//    pivot counts of LDL^T at shifted matrices) refined by bisection.
//  - oracle_charpoly: exact characteristic polynomial over __int128 by the
//    Faddeev-LeVerrier recurrence.
//  - oracle_annihilates / oracle_exact_multiplicities: exact verification
//    that a spectrum equals a given value set with given multiplicities,
//    via the annihilating product and power-sum Vandermonde solve.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "pmspec/int_matrix.hpp"

namespace oracle {

using pmspec::i64;
using pmspec::IntMatrix;
using pmspec::IntSymMatrix;
using i128 = __int128;

// Number of eigenvalues of A strictly below t, by counting negative pivots of
// the elimination of A - t*I (Sylvester's law of inertia). Zero pivots are
// nudged; bisection never needs t exactly at an eigenvalue.
inline int count_below(const IntSymMatrix& m, double t) {
    const int n = static_cast<int>(m.order());
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    double scale = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i * n + j)] = static_cast<double>(m(i, j)) - (i == j ? t : 0.0);
            scale = std::max(scale, std::abs(a[static_cast<std::size_t>(i * n + j)]));
        }
    int negatives = 0;
    for (int k = 0; k < n; ++k) {
        double pivot = a[static_cast<std::size_t>(k * n + k)];
        if (std::abs(pivot) < 1e-14 * scale) pivot = (pivot < 0 ? -1.0 : 1.0) * 1e-14 * scale;
        if (pivot < 0) ++negatives;
        for (int i = k + 1; i < n; ++i) {
            const double f = a[static_cast<std::size_t>(i * n + k)] / pivot;
            if (f == 0.0) continue;
            for (int j = k; j < n; ++j)
                a[static_cast<std::size_t>(i * n + j)] -= f * a[static_cast<std::size_t>(k * n + j)];
        }
    }
    return negatives;
}

// All eigenvalues, descending, to absolute accuracy ~1e-11 * radius.
inline std::vector<double> oracle_eigen_desc(const IntSymMatrix& m) {
    const int n = static_cast<int>(m.order());
    double radius = 1.0;
    for (i64 i = 0; i < n; ++i) {
        double row = 0;
        for (i64 j = 0; j < n; ++j) row += std::abs(static_cast<double>(m(i, j)));
        radius = std::max(radius, row);
    }
    std::vector<double> asc(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        double lo = -radius - 1.0, hi = radius + 1.0;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (count_below(m, mid) >= j) hi = mid;
            else lo = mid;
        }
        asc[static_cast<std::size_t>(j - 1)] = 0.5 * (lo + hi);
    }
    std::vector<double> desc(asc.rbegin(), asc.rend());
    return desc;
}

// Monic characteristic polynomial coefficients c with
// p(x) = x^n + c[0] x^{n-1} + ... + c[n-1], computed exactly.
inline std::vector<i128> oracle_charpoly(const IntMatrix& a) {
    const i64 n = a.rows();
    std::vector<i128> mk(static_cast<std::size_t>(n * n), 0); // M_k
    std::vector<i128> coeffs;
    // M_1 = A
    for (i64 i = 0; i < n * n; ++i) mk[static_cast<std::size_t>(i)] = a.data()[static_cast<std::size_t>(i)];
    for (i64 k = 1; k <= n; ++k) {
        i128 tr = 0;
        for (i64 i = 0; i < n; ++i) tr += mk[static_cast<std::size_t>(i * n + i)];
        if (tr % k != 0) throw std::logic_error("faddeev-leverrier: non-integral step");
        const i128 ck = -tr / k;
        coeffs.push_back(ck);
        if (k == n) break;
        // M_{k+1} = A * (M_k + c_k I)
        std::vector<i128> shifted = mk;
        for (i64 i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i * n + i)] += ck;
        std::vector<i128> next(static_cast<std::size_t>(n * n), 0);
        for (i64 i = 0; i < n; ++i)
            for (i64 l = 0; l < n; ++l) {
                const i128 ail = a(i, l);
                if (ail == 0) continue;
                for (i64 j = 0; j < n; ++j)
                    next[static_cast<std::size_t>(i * n + j)] += ail * shifted[static_cast<std::size_t>(l * n + j)];
            }
        mk = std::move(next);
    }
    return coeffs;
}

// Expands prod (x - roots[i]) into monic coefficients, exactly.
inline std::vector<i128> poly_from_roots(const std::vector<i64>& roots) {
    std::vector<i128> c{};
    for (i64 r : roots) {
        c.push_back(0);
        for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i] - static_cast<i128>(r) * c[i - 1];
        c[0] -= r;
    }
    return c;
}

// True iff prod (A - v*I) over the given values is the zero matrix, exactly.
inline bool oracle_annihilates(const IntSymMatrix& m, const std::vector<i64>& values) {
    const i64 n = m.order();
    std::vector<i128> acc(static_cast<std::size_t>(n * n), 0);
    for (i64 i = 0; i < n; ++i) acc[static_cast<std::size_t>(i * n + i)] = 1;
    for (i64 v : values) {
        std::vector<i128> next(static_cast<std::size_t>(n * n), 0);
        for (i64 i = 0; i < n; ++i)
            for (i64 l = 0; l < n; ++l) {
                const i128 f = acc[static_cast<std::size_t>(i * n + l)];
                if (f == 0) continue;
                for (i64 j = 0; j < n; ++j) {
                    const i128 e = static_cast<i128>(m(l, j)) - (l == j ? static_cast<i128>(v) : 0);
                    next[static_cast<std::size_t>(i * n + j)] += f * e;
                }
            }
        acc = std::move(next);
    }
    for (const i128& x : acc)
        if (x != 0) return false;
    return true;
}

// If the spectrum of m is contained in `values` (verified exactly via the
// annihilating product), returns the multiplicity of each value, solved
// exactly from the power sums trace(A^p), p = 0..d-1. Returns nullopt when
// the annihilation fails or the solve is not a valid multiplicity vector.
inline std::optional<std::vector<i64>> oracle_exact_multiplicities(const IntSymMatrix& m,
                                                                   const std::vector<i64>& values) {
    if (!oracle_annihilates(m, values)) return std::nullopt;
    const i64 n = m.order();
    const std::size_t d = values.size();

    // power sums s_p = trace(A^p)
    std::vector<i128> s(d, 0);
    s[0] = n;
    std::vector<i128> power(static_cast<std::size_t>(n * n), 0);
    for (i64 i = 0; i < n; ++i) power[static_cast<std::size_t>(i * n + i)] = 1;
    for (std::size_t p = 1; p < d; ++p) {
        std::vector<i128> next(static_cast<std::size_t>(n * n), 0);
        for (i64 i = 0; i < n; ++i)
            for (i64 l = 0; l < n; ++l) {
                const i128 f = power[static_cast<std::size_t>(i * n + l)];
                if (f == 0) continue;
                for (i64 j = 0; j < n; ++j) next[static_cast<std::size_t>(i * n + j)] += f * m(l, j);
            }
        power = std::move(next);
        i128 tr = 0;
        for (i64 i = 0; i < n; ++i) tr += power[static_cast<std::size_t>(i * n + i)];
        s[p] = tr;
    }

    // Solve V * mult = s with V[p][i] = values[i]^p by Cramer's rule.
    auto det = [&](const std::vector<i128>& mat, std::size_t dim) -> i128 {
        // fraction-free Gaussian elimination (Bareiss)
        std::vector<i128> a = mat;
        i128 prev = 1;
        i128 sign = 1;
        for (std::size_t k = 0; k + 1 < dim; ++k) {
            if (a[k * dim + k] == 0) {
                std::size_t swap_row = k + 1;
                while (swap_row < dim && a[swap_row * dim + k] == 0) ++swap_row;
                if (swap_row == dim) return 0;
                for (std::size_t j = 0; j < dim; ++j) std::swap(a[k * dim + j], a[swap_row * dim + j]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < dim; ++i)
                for (std::size_t j = k + 1; j < dim; ++j) {
                    a[i * dim + j] = (a[i * dim + j] * a[k * dim + k] - a[i * dim + k] * a[k * dim + j]) / prev;
                }
            prev = a[k * dim + k];
        }
        return sign * a[(dim - 1) * dim + (dim - 1)];
    };

    std::vector<i128> v(d * d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t i = 0; i < d; ++i) {
            i128 pw = 1;
            for (std::size_t e = 0; e < p; ++e) pw *= values[i];
            v[p * d + i] = pw;
        }
    const i128 dv = det(v, d);
    if (dv == 0) return std::nullopt;
    std::vector<i64> mult(d, 0);
    i128 total = 0;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<i128> vi = v;
        for (std::size_t p = 0; p < d; ++p) vi[p * d + i] = s[p];
        const i128 di = det(vi, d);
        if (di % dv != 0) return std::nullopt;
        const i128 mi = di / dv;
        if (mi < 0 || mi > n) return std::nullopt;
        mult[i] = static_cast<i64>(mi);
        total += mi;
    }
    if (total != n) return std::nullopt;
    return mult;
}

} // namespace oracle
