#pragma once

// Matrix -> graph and graph -> graph transforms: half-shift constructions,
// doubling, blowups, complements, and the named extremal-graph builders.

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmspec/common.hpp"
#include "pmspec/constructions.hpp"
#include "pmspec/int_matrix.hpp"
#include "pmspec/spectra.hpp"

namespace pmspec {

struct BlowupSpec {
    i64 t = 1;
    bool closed = false;
};

enum class ZeroDiag { automatic, force };

// G = (sign*(B (x) J_t) + J)/2 as a 0/1 matrix. With ZeroDiag::automatic the
// diagonal of sign*B must already be constant -1, so the result has a zero
// diagonal and the spectrum is an exact affine image of B's. ZeroDiag::force
// zeroes the diagonal afterwards and costs at most 1 per eigenvalue.
inline Graph half_shift(const PmOneMatrix& b, i64 t, int sign, ZeroDiag zero_diag) {
    if (t < 1) throw precondition_error("half_shift: t must be positive");
    if (sign != 1 && sign != -1) throw precondition_error("half_shift: sign must be +1 or -1");
    if (zero_diag == ZeroDiag::automatic) {
        for (i64 i = 0; i < b.order(); ++i)
            if (sign * b(i, i) != -1)
                throw precondition_error("half_shift: diagonal of sign*B must be constant -1 for zero_diag=auto");
    }
    const i64 n = b.order() * t;
    IntMatrix m(n, n);
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) {
            const i64 v = sign * b(i / t, j / t) + 1; // 0 or 2
            m(i, j) = v / 2;
        }
    if (zero_diag == ZeroDiag::force)
        for (i64 i = 0; i < n; ++i) m(i, i) = 0;
    return Graph(IntSymMatrix(std::move(m)));
}

// [[A, -A], [-A, A]] = K (x) A. Rowsums vanish; every nonzero singular value
// doubles while keeping its multiplicity.
inline PmOneMatrix doubling(const PmOneMatrix& a) {
    const IntSymMatrix kk = IntSymMatrix::from_rows({{1, -1}, {-1, 1}});
    return PmOneMatrix(kron(kk, a.sym()));
}

inline Graph blowup(const Graph& g, const BlowupSpec& spec) {
    if (spec.t < 1) throw precondition_error("blowup: t must be positive");
    const i64 n = g.order();
    const IntMatrix jt = IntMatrix::ones(spec.t);
    if (!spec.closed) return Graph(IntSymMatrix(kron(g.mat(), jt)));
    IntMatrix m = kron(mat_add(g.mat(), IntMatrix::identity(n)), jt);
    for (i64 i = 0; i < n * spec.t; ++i) m(i, i) = 0;
    return Graph(IntSymMatrix(std::move(m)));
}

inline Graph complement(const Graph& g) {
    const i64 n = g.order();
    IntMatrix m(n, n);
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) m(i, j) = i == j ? 0 : 1 - g(i, j);
    return Graph(IntSymMatrix(std::move(m)));
}

// A built graph together with the spectrum it is guaranteed to have,
// as (value, multiplicity) lines in descending order.
struct GraphBuild {
    Graph graph;
    std::string recipe;
    std::vector<std::pair<Rational, i64>> expected_spectrum;
};

// Graph of order s*n*t whose (s^2+1)-th singular value equals n*t/2 exactly:
// half-shift of the zero-rowsum block construction.
inline GraphBuild build_thp(i64 s, i64 t, std::optional<i64> n = {}) {
    if (s < 2) throw precondition_error("thp: s must be at least 2");
    if (t < 1) throw precondition_error("thp: t must be positive");
    const Construction c = build_thkhn(s, n);
    const i64 dim = c.recipe.n;
    GraphBuild out;
    out.graph = half_shift(c.matrix, t, +1, ZeroDiag::automatic);
    out.recipe = "thp(s=" + std::to_string(s) + ", n=" + std::to_string(dim) + ", t=" + std::to_string(t) + ")";
    const i64 order = s * dim * t;
    out.expected_spectrum = {
        {Rational(s * dim * t, 2), 1},
        {Rational(dim * t, 2), binomial(s, 2)},
        {Rational(0), order - s * s - 1},
        {Rational(-dim * t, 2), binomial(s + 1, 2)},
    };
    return out;
}

// Even s: graph of order s*n*t whose Ky Fan s^2-norm equals (1+s)*s*n*t/2,
// meeting the (1+sqrt(k))*order/2 ceiling exactly. Built as (J - B (x) J_t)/2
// from the regular family with the all-ones eigenvector.
inline GraphBuild build_thck(i64 s, i64 t, std::optional<i64> n = {}) {
    if (s < 2 || s % 2 != 0) throw precondition_error("thck: s must be even and at least 2");
    if (t < 1) throw precondition_error("thck: t must be positive");
    const Construction c = build_thj(s, n);
    const i64 dim = c.recipe.n;
    GraphBuild out;
    out.graph = half_shift(c.matrix, t, -1, ZeroDiag::automatic);
    out.recipe = "thck(s=" + std::to_string(s) + ", n=" + std::to_string(dim) + ", t=" + std::to_string(t) + ")";
    const i64 order = s * dim * t;
    out.expected_spectrum = {
        {Rational((s + 1) * dim * t, 2), 1},
        {Rational(dim * t, 2), binomial(s, 2) - 1},
        {Rational(0), order - s * s},
        {Rational(-dim * t, 2), binomial(s + 1, 2)},
    };
    return out;
}

struct KyFanBuild {
    GraphBuild build;
    i64 k = 0;         // how many singular values the attained sum uses
    Rational attained; // exact Ky Fan k-norm of the built graph
};

inline KyFanBuild build_thck_kyfan(i64 s, i64 t, std::optional<i64> n = {}) {
    KyFanBuild out{build_thck(s, t, n), s * s, Rational(0)};
    const i64 order = out.build.graph.order(); // s*n*t
    out.attained = Rational(checked_mul(1 + s, order), 2);
    return out;
}

// Ky Fan lower-bound graph from any certified regular S_k member with nonzero
// rowsums: Ky Fan k-norm at least (1+sqrt(k))*n*t/2 - k. The diagonal zeroing
// penalty makes this a bound rather than an exact value.
struct ThCk1Build {
    Graph graph;
    std::string recipe;
    i64 k = 0;
    double kyfan_lower_bound = 0;
};

inline ThCk1Build build_thck1(const PmOneMatrix& b, i64 k, i64 t) {
    if (t < 1) throw precondition_error("thck1: t must be positive");
    if (!sk_certify(b, k).is_member())
        throw precondition_error("thck1: input is not a certified member of S_" + std::to_string(k));
    const auto rs = rowsums(b.sym());
    const i64 r0 = rs.at(0);
    for (i64 r : rs)
        if (r != r0) throw precondition_error("thck1: input must be regular (equal rowsums)");
    if (r0 == 0) throw precondition_error("thck1: rowsums must be nonzero");
    // rowsum is +-n/sqrt(k); flip to the negative branch so J - B(x)J_t shifts upward
    const PmOneMatrix base = r0 > 0 ? b.negated() : b;
    ThCk1Build out;
    out.k = k;
    out.graph = half_shift(base, t, -1, ZeroDiag::force);
    out.recipe = "thck1(order=" + std::to_string(b.order()) + ", k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")";
    const double nt = static_cast<double>(b.order() * t);
    out.kyfan_lower_bound = 0.5 * (1.0 + std::sqrt(static_cast<double>(k))) * nt - static_cast<double>(k);
    return out;
}

// Ky Fan extremal graph from a regular symmetric Hadamard matrix of order k
// with positive rowsums and -1 diagonal: order k*n, Ky Fan k-norm exactly
// (1+sqrt(k))*k*n/2, meeting the ceiling at the graph's own order.
inline GraphBuild build_kyfan_hadamard(const PmOneMatrix& h, i64 n) {
    if (n < 1) throw precondition_error("kyfan-hadamard: n must be positive");
    const i64 k = h.order();
    if (mat_pow(h.sym(), 2) != mat_scale(IntMatrix::identity(k), k))
        throw precondition_error("kyfan-hadamard: input is not a Hadamard matrix (H^2 != k*I)");
    for (i64 i = 0; i < k; ++i)
        if (h(i, i) != -1) throw precondition_error("kyfan-hadamard: diagonal must be all -1");
    const auto rs = rowsums(h.sym());
    const i64 r0 = rs.at(0);
    for (i64 r : rs)
        if (r != r0) throw precondition_error("kyfan-hadamard: rowsums must be equal");
    if (r0 <= 0) throw precondition_error("kyfan-hadamard: rowsums must be positive");
    if (r0 * r0 != k)
        throw precondition_error("kyfan-hadamard: regular Hadamard rowsum must be sqrt(order)");

    GraphBuild out;
    out.graph = half_shift(h, n, +1, ZeroDiag::automatic);
    out.recipe = "kyfan-hadamard(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
    // inertia of h from its trace: all eigenvalues are +-sqrt(k) = +-r0
    const i64 diff = trace(h.sym()) / r0; // n_plus - n_minus
    const i64 n_plus = (k + diff) / 2;
    const i64 n_minus = k - n_plus;
    out.expected_spectrum = {
        {Rational((k + r0) * n, 2), 1},
        {Rational(r0 * n, 2), n_plus - 1},
        {Rational(0), k * (n - 1)},
        {Rational(-r0 * n, 2), n_minus},
    };
    return out;
}

// The built-in order-4 instance: J_4 - 2*I_4.
inline PmOneMatrix regular_hadamard_order4() {
    return PmOneMatrix(IntSymMatrix(mat_sub(IntMatrix::ones(4), mat_scale(IntMatrix::identity(4), 2))));
}

// Nordhaus-Gaddum pair: a graph and its complement built from a doubled S_k
// member, with lambda_{k+1}(G) + lambda_{k+1}(comp G) >= n*t/sqrt(2k) - 2 and
// the bottom-end analogue without the -2.
struct NgPair {
    Graph graph;
    Graph graph_complement;
    std::string recipe;
    i64 k = 0;
    i64 base_order = 0; // order of the doubled matrix
    i64 t = 1;
    double bound_top = 0;    // lower bound on lambda_{k+1}(G) + lambda_{k+1}(comp)
    double bound_bottom = 0; // lower bound on |lambda_{n-k+1}| summed over the pair
};

inline NgPair build_thng_pair(i64 k, i64 t) {
    if (t < 1) throw precondition_error("thng: t must be positive");
    const CertifiedMatrix seed = sk_realize(k);
    const CertifiedMatrix dbl = sk_double(seed.matrix, k);
    const i64 n = dbl.matrix.order();

    NgPair out;
    out.k = k;
    out.base_order = n;
    out.t = t;
    out.recipe = "thng(k=" + std::to_string(k) + ", t=" + std::to_string(t) + ", doubled_order=" + std::to_string(n) + ")";
    out.graph = half_shift(dbl.matrix, t, +1, ZeroDiag::force);
    out.graph_complement = complement(out.graph);
    const double nt = static_cast<double>(n * t);
    out.bound_top = nt / std::sqrt(2.0 * static_cast<double>(k)) - 2.0;
    out.bound_bottom = nt / std::sqrt(2.0 * static_cast<double>(k));
    return out;
}

} // namespace pmspec
