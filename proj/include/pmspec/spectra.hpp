#pragma once

// Floating symmetric eigensolver (cyclic Jacobi) and the derived spectral
// quantities: ordered eigenvalues, singular values, Ky Fan sums.

#include <algorithm>
#include <cmath>
#include <vector>

#include "pmspec/common.hpp"
#include "pmspec/int_matrix.hpp"

namespace pmspec {

// Cyclic Jacobi on a dense symmetric matrix stored row-major in `a` (n*n
// doubles, overwritten). Terminates when the off-diagonal Frobenius norm is
// below tol. Deterministic: fixed sweep order, no pivot searching.
inline void jacobi_inplace(std::vector<double>& a, int n, double tol, int max_sweeps = 100) {
    auto off_norm = [&]() {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a[static_cast<std::size_t>(i * n + j)] * a[static_cast<std::size_t>(i * n + j)];
        return std::sqrt(2.0 * s);
    };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double off = off_norm();
        if (off <= tol) return;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<std::size_t>(p * n + q)];
                if (apq == 0.0) continue;
                const double app = a[static_cast<std::size_t>(p * n + p)];
                const double aqq = a[static_cast<std::size_t>(q * n + q)];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[static_cast<std::size_t>(k * n + p)];
                    const double akq = a[static_cast<std::size_t>(k * n + q)];
                    a[static_cast<std::size_t>(k * n + p)] = c * akp - s * akq;
                    a[static_cast<std::size_t>(k * n + q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[static_cast<std::size_t>(p * n + k)];
                    const double aqk = a[static_cast<std::size_t>(q * n + k)];
                    a[static_cast<std::size_t>(p * n + k)] = c * apk - s * aqk;
                    a[static_cast<std::size_t>(q * n + k)] = s * apk + c * aqk;
                }
            }
        }
    }
    const double off = off_norm();
    if (off > tol)
        throw convergence_error("jacobi did not converge: off-diagonal residual " + std::to_string(off) +
                                " above tolerance " + std::to_string(tol));
}

// Descending eigenvalues of a symmetric matrix given as a flat double buffer.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol) {
    jacobi_inplace(a, n, tol);
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i * n + i)];
    std::stable_sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

struct Spectrum {
    std::vector<double> values; // descending
    double tolerance = 0;

    i64 order() const { return static_cast<i64>(values.size()); }
};

inline double default_eigen_tolerance(i64 order) { return 1e-9 * static_cast<double>(order); }

// Eigenvalues of an exact symmetric matrix, descending. tolerance <= 0 picks
// the default 1e-9 * order. The trace and trace-of-square consistency checks
// run on every call; a failure means the rotation loop silently lost
// precision, which is treated as non-convergence.
inline Spectrum eigen_sym(const IntSymMatrix& m, double tolerance = 0) {
    const i64 n = m.order();
    if (tolerance <= 0) tolerance = default_eigen_tolerance(n);
    std::vector<double> a(static_cast<std::size_t>(n * n));
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = static_cast<double>(m(i, j));
    Spectrum sp;
    sp.tolerance = tolerance;
    sp.values = jacobi_eigenvalues(std::move(a), static_cast<int>(n), tolerance);

    double sum = 0, sum_sq = 0;
    for (double v : sp.values) {
        sum += v;
        sum_sq += v * v;
    }
    const double tr = static_cast<double>(trace(m));
    const double tr_sq = static_cast<double>(trace(mat_pow(m, 2)));
    const double scale = std::max(1.0, std::abs(tr_sq));
    if (std::abs(sum - tr) > static_cast<double>(n) * tolerance * std::max(1.0, std::sqrt(scale)) ||
        std::abs(sum_sq - tr_sq) > static_cast<double>(n * n) * tolerance * scale) {
        throw convergence_error("eigen_sym: trace consistency check failed");
    }
    return sp;
}

inline std::vector<double> singular_values(const IntSymMatrix& m, double tolerance = 0) {
    Spectrum sp = eigen_sym(m, tolerance);
    for (double& v : sp.values) v = std::abs(v);
    std::stable_sort(sp.values.begin(), sp.values.end(), std::greater<double>());
    return sp.values;
}

// Sum of the k largest singular values.
inline double ky_fan(const IntSymMatrix& m, i64 k, double tolerance = 0) {
    if (k < 1 || k > m.order()) throw precondition_error("ky_fan: k out of range");
    const auto sv = singular_values(m, tolerance);
    double s = 0;
    for (i64 i = 0; i < k; ++i) s += sv[static_cast<std::size_t>(i)];
    return s;
}

inline double lambda_k(const IntSymMatrix& m, i64 k, double tolerance = 0) {
    if (k < 1 || k > m.order()) throw precondition_error("lambda_k: k out of range");
    return eigen_sym(m, tolerance).values[static_cast<std::size_t>(k - 1)];
}

// k-th smallest eigenvalue, i.e. lambda_{n-k+1}.
inline double lambda_from_bottom(const IntSymMatrix& m, i64 k, double tolerance = 0) {
    if (k < 1 || k > m.order()) throw precondition_error("lambda_from_bottom: k out of range");
    const auto& v = eigen_sym(m, tolerance).values;
    return v[static_cast<std::size_t>(m.order() - k)];
}

// Convenience overloads; graphs and +-1 matrices delegate to their symmetric core.
inline Spectrum eigen_sym(const Graph& g, double tol = 0) { return eigen_sym(g.sym(), tol); }
inline Spectrum eigen_sym(const PmOneMatrix& a, double tol = 0) { return eigen_sym(a.sym(), tol); }
inline std::vector<double> singular_values(const Graph& g, double tol = 0) { return singular_values(g.sym(), tol); }
inline std::vector<double> singular_values(const PmOneMatrix& a, double tol = 0) { return singular_values(a.sym(), tol); }
inline double ky_fan(const Graph& g, i64 k, double tol = 0) { return ky_fan(g.sym(), k, tol); }
inline double ky_fan(const PmOneMatrix& a, i64 k, double tol = 0) { return ky_fan(a.sym(), k, tol); }
inline double lambda_k(const Graph& g, i64 k, double tol = 0) { return lambda_k(g.sym(), k, tol); }
inline double lambda_from_bottom(const Graph& g, i64 k, double tol = 0) { return lambda_from_bottom(g.sym(), k, tol); }

// Groups a descending eigenvalue list into (value, multiplicity) clusters.
// Neighbours within merge_tol (default 1e-6 * spectral radius) are merged and
// reported at the cluster mean.
inline std::vector<std::pair<double, i64>> group_multiplicities(const std::vector<double>& values,
                                                                double merge_tol = 0) {
    std::vector<std::pair<double, i64>> groups;
    if (values.empty()) return groups;
    if (merge_tol <= 0) {
        double radius = 0;
        for (double v : values) radius = std::max(radius, std::abs(v));
        merge_tol = 1e-6 * std::max(radius, 1.0);
    }
    double acc = values[0];
    i64 count = 1;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (std::abs(values[i] - values[i - 1]) <= merge_tol) {
            acc += values[i];
            ++count;
        } else {
            groups.emplace_back(acc / static_cast<double>(count), count);
            acc = values[i];
            count = 1;
        }
    }
    groups.emplace_back(acc / static_cast<double>(count), count);
    return groups;
}

// Counts eigenvalues above +tol, within [-tol, tol], and below -tol.
struct InertiaCount {
    i64 positive = 0;
    i64 zero = 0;
    i64 negative = 0;
};

inline InertiaCount count_inertia(const std::vector<double>& values, double zero_tol) {
    InertiaCount c;
    for (double v : values) {
        if (v > zero_tol) ++c.positive;
        else if (v < -zero_tol) ++c.negative;
        else ++c.zero;
    }
    return c;
}

} // namespace pmspec
