#pragma once

// Block constructions of symmetric +-1 matrices with exactly s^2 nonzero
// eigenvalues of equal modulus, the closure algebra on the classes S_k
// (negation, Kronecker product, doubling), and exact S_k certification.
//
// S_k is the set of symmetric +-1 matrices whose k-th largest singular value
// equals order/sqrt(k); equivalently, exactly k nonzero eigenvalues, all of
// modulus order/sqrt(k). Membership has an integer-only certificate:
// k*B^3 == order^2 * B, since trace(B^2) == order^2 holds for every
// symmetric +-1 matrix and pins the number of nonzero eigenvalues to k.

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmspec/common.hpp"
#include "pmspec/hadamard.hpp"
#include "pmspec/int_matrix.hpp"
#include "pmspec/latin.hpp"
#include "pmspec/spectra.hpp"

namespace pmspec {

enum class Verdict { member, non_member, indeterminate };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::member: return "member";
        case Verdict::non_member: return "non_member";
        default: return "indeterminate";
    }
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Inertia {
    i64 plus = 0;
    i64 zero = 0;
    i64 minus = 0;
};

struct SkCertificate {
    i64 k = 0;
    i64 order = 0;
    Verdict verdict = Verdict::indeterminate;
    Inertia inertia;
    std::vector<CheckResult> checks;

    bool is_member() const { return verdict == Verdict::member; }
};

enum class CertifyMode { exact, floating };

// Exact mode runs the integer cubic identity k*B^3 == n^2*B plus the
// trace-square identity, and derives the inertia from trace(B): when k is a
// perfect square, sqrt(k)*trace/n must be an integer of the right parity;
// otherwise the trace must vanish and the inertia is balanced. Float mode
// compares the singular spectrum against {n/sqrt(k) x k, 0 x (n-k)}.
inline SkCertificate sk_certify(const PmOneMatrix& b, i64 k, CertifyMode mode = CertifyMode::exact,
                                double tolerance = 0) {
    if (k < 1) throw precondition_error("sk_certify: k must be positive");
    const i64 n = b.order();
    SkCertificate cert;
    cert.k = k;
    cert.order = n;

    const i64 tr = trace(b.sym());
    const i64 tr_sq = trace(mat_pow(b.sym(), 2));
    bool membership_shape = false;

    if (mode == CertifyMode::exact) {
        // k*B^3 == n^2*B forces every eigenvalue into {0, +-n/sqrt(k)}
        const bool minpoly_ok = minpoly_zero_pm_check(b.sym(), n * n, k);
        cert.checks.push_back({"minpoly",
                               minpoly_ok,
                               std::to_string(k) + "*B^3 == " + std::to_string(n * n) + "*B " +
                                   (minpoly_ok ? "holds" : "fails") + " entrywise"});
        membership_shape = minpoly_ok;
    } else {
        if (tolerance <= 0) tolerance = 1e-6 * static_cast<double>(n);
        const auto sv = singular_values(b.sym());
        const double target = static_cast<double>(n) / std::sqrt(static_cast<double>(k));
        bool ok = n >= k;
        for (i64 i = 0; ok && i < n; ++i) {
            const double want = i < k ? target : 0.0;
            if (std::abs(sv[static_cast<std::size_t>(i)] - want) > tolerance) ok = false;
        }
        cert.checks.push_back({"singular_shape", ok,
                               "singular values within " + std::to_string(tolerance) + " of {" +
                                   std::to_string(target) + " x " + std::to_string(k) + ", 0 x " +
                                   std::to_string(n - k) + "}"});
        membership_shape = ok;
    }

    const bool trace_sq_ok = tr_sq == n * n;
    cert.checks.push_back({"trace_square", trace_sq_ok,
                           "trace(B^2) = " + std::to_string(tr_sq) + ", order^2 = " + std::to_string(n * n)});

    // Inertia from the trace: (n_plus - n_minus) * n/sqrt(k) == trace(B).
    bool integrality_ok = false;
    i64 diff = 0;
    if (is_perfect_square(k)) {
        const i64 root = isqrt_floor(k);
        const i64 scaled = tr * root;
        if (scaled % n == 0) {
            diff = scaled / n;
            integrality_ok = ((diff % 2 + 2) % 2 == k % 2) && diff >= -k && diff <= k;
        }
        cert.checks.push_back({"inertia_integrality", integrality_ok,
                               "sqrt(k)*trace/n = " + std::to_string(tr) + "*" + std::to_string(root) + "/" +
                                   std::to_string(n) + (integrality_ok ? " is an admissible integer" : " is not an admissible integer")});
    } else {
        integrality_ok = (tr == 0) && (k % 2 == 0);
        diff = 0;
        cert.checks.push_back({"inertia_integrality", integrality_ok,
                               std::string("k is not a perfect square, so a member needs a balanced ") +
                                   "inertia and zero trace; trace = " + std::to_string(tr) +
                                   (k % 2 ? " (k odd: impossible)" : "")});
    }

    const bool member = membership_shape && trace_sq_ok && integrality_ok;
    cert.verdict = member ? Verdict::member : Verdict::non_member;

    if (member) {
        cert.inertia.plus = (k + diff) / 2;
        cert.inertia.minus = (k - diff) / 2;
        cert.inertia.zero = n - k;
    } else {
        // best-effort context: count signs with the floating solver
        const auto sp = eigen_sym(b.sym());
        double radius = 0;
        for (double v : sp.values) radius = std::max(radius, std::abs(v));
        const auto counts = count_inertia(sp.values, 1e-6 * std::max(1.0, radius));
        cert.inertia.plus = counts.positive;
        cert.inertia.zero = counts.zero;
        cert.inertia.minus = counts.negative;
    }
    return cert;
}

enum class Family { thkhn, thj, thj1 };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::thkhn: return "thkhn";
        case Family::thj: return "thj";
        default: return "thj1";
    }
}

struct ConstructionRecipe {
    Family family = Family::thkhn;
    i64 s = 0;
    i64 n = 0;
    std::string hadamard_source;
    std::string latin_source;
};

struct Construction {
    PmOneMatrix matrix;
    ConstructionRecipe recipe;
    SkCertificate certificate;
    Inertia expected_inertia;
    // Divergence of the binomial-form eigenvalue counts C(s-1,2)/C(s+1,2)
    // from the trace-derived inertia; empty when they coincide.
    std::string inertia_note;
};

namespace cons_detail {

inline IntMatrix outer(const std::vector<i64>& x, i64 scale) {
    const i64 n = static_cast<i64>(x.size());
    IntMatrix m(n, n);
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j)
            m(i, j) = checked_mul(scale, checked_mul(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]));
    return m;
}

// Places block A[l(i,j)] at block position (i,j); flip_diag_block negates one
// diagonal block (used by the even-s regular family to fix the trace).
inline IntSymMatrix assemble(const LatinSquare& l, const std::vector<IntMatrix>& blocks,
                             std::optional<i64> flip_diag_block = {}) {
    const i64 s = l.size;
    const i64 n = blocks.at(1).rows();
    IntMatrix b(s * n, s * n);
    for (i64 bi = 0; bi < s; ++bi) {
        for (i64 bj = 0; bj < s; ++bj) {
            const IntMatrix& blk = blocks.at(static_cast<std::size_t>(l.at(bi, bj)));
            const i64 sign = (flip_diag_block && bi == bj && bi == *flip_diag_block) ? -1 : 1;
            for (i64 i = 0; i < n; ++i)
                for (i64 j = 0; j < n; ++j) b(bi * n + i, bj * n + j) = sign * blk(i, j);
        }
    }
    return IntSymMatrix(std::move(b));
}

inline void require_rowsums(const PmOneMatrix& b, i64 want, const std::string& who) {
    for (i64 r : rowsums(b.sym()))
        if (r != want)
            throw certification_error(who + ": rowsum " + std::to_string(r) + " != " + std::to_string(want));
}

inline void require_diagonal(const PmOneMatrix& b, i64 want, const std::string& who) {
    for (i64 i = 0; i < b.order(); ++i)
        if (b(i, i) != want)
            throw certification_error(who + ": diagonal entry " + std::to_string(b(i, i)) + " != " + std::to_string(want));
}

inline void require_member(const SkCertificate& cert, const std::string& who) {
    if (!cert.is_member()) throw certification_error(who + ": built matrix failed exact S_k certification");
}

inline std::string binomial_note(Family fam, i64 s, const Inertia& derived) {
    i64 alt_plus = 0, alt_minus = 0;
    switch (fam) {
        case Family::thkhn:
            alt_plus = binomial(s - 1, 2);
            alt_minus = binomial(s + 1, 2);
            break;
        case Family::thj:
            alt_plus = binomial(s + 1, 2);
            alt_minus = binomial(s - 1, 2);
            break;
        default:
            alt_plus = binomial(s + 1, 2) - 1;
            alt_minus = binomial(s - 1, 2) + 1;
            break;
    }
    if (alt_plus == derived.plus && alt_minus == derived.minus) return {};
    return "trace identity gives n+ = " + std::to_string(derived.plus) + ", n- = " + std::to_string(derived.minus) +
           "; the binomial-form counts (" + std::to_string(alt_plus) + ", " + std::to_string(alt_minus) +
           ") do not satisfy the trace and total-count identities";
}

} // namespace cons_detail

// Zero-rowsum family: blocks -x_p (x) x_p on a back-circulant square, with the
// x_p orthogonal to each other and to the all-ones vector. Order s*n, diagonal
// all -1, rowsums 0, trace -s*n, member of S_{s^2}.
inline Construction build_thkhn(i64 s, std::optional<i64> n = {}) {
    if (s < 2) throw precondition_error("thkhn: s must be at least 2");
    const OrthFamily fam = orth_family(s, /*include_allones=*/false, n);
    const i64 dim = fam.dimension;

    std::vector<IntMatrix> blocks(static_cast<std::size_t>(s + 1), IntMatrix(1, 1));
    for (i64 p = 1; p <= s; ++p)
        blocks[static_cast<std::size_t>(p)] = cons_detail::outer(fam.vectors[static_cast<std::size_t>(p - 1)], -1);

    const LatinSquare l = back_circulant(s);
    Construction out{PmOneMatrix(cons_detail::assemble(l, blocks)),
                     {Family::thkhn, s, dim, fam.source, "back_circulant"},
                     {},
                     {binomial(s, 2), s * dim - s * s, binomial(s + 1, 2)},
                     {}};
    cons_detail::require_diagonal(out.matrix, -1, "thkhn");
    cons_detail::require_rowsums(out.matrix, 0, "thkhn");
    out.certificate = sk_certify(out.matrix, s * s, CertifyMode::exact);
    cons_detail::require_member(out.certificate, "thkhn");
    if (trace(out.matrix.sym()) != -s * dim) throw certification_error("thkhn: trace != -s*n");
    out.inertia_note = cons_detail::binomial_note(Family::thkhn, s, out.expected_inertia);
    return out;
}

// Regular family with the all-ones vector as an eigenvector to -n: block
// -J at the off-diagonal symbol, rank-one blocks x_p (x) x_p elsewhere, placed
// on the constant-diagonal symmetric square. Requires even s (that square does
// not exist for odd order). Diagonal all +1, trace s*n, member of S_{s^2}.
inline Construction build_thj(i64 s, std::optional<i64> n = {}) {
    if (s < 2) throw precondition_error("thj: s must be at least 2");
    if (s % 2 != 0)
        throw precondition_error("thj: s must be even (a constant-diagonal symmetric Latin square of odd order does not exist)");
    // default block dimension floored at 4: order-2 blocks collapse the result
    // onto an order-4 classical matrix
    const OrthFamily fam = orth_family(s, /*include_allones=*/true, n, /*order_floor=*/4);
    const i64 dim = fam.dimension;

    std::vector<IntMatrix> blocks(static_cast<std::size_t>(s + 1), IntMatrix(1, 1));
    blocks[1] = IntMatrix(dim, dim, -1); // -J
    for (i64 p = 2; p <= s; ++p)
        blocks[static_cast<std::size_t>(p)] = cons_detail::outer(fam.vectors[static_cast<std::size_t>(p - 1)], 1);

    const LatinSquare l = const_diag_symmetric(s);
    Construction out{PmOneMatrix(cons_detail::assemble(l, blocks)),
                     {Family::thj, s, dim, fam.source, "const_diag"},
                     {},
                     {binomial(s + 1, 2), s * dim - s * s, binomial(s, 2)},
                     {}};
    cons_detail::require_diagonal(out.matrix, 1, "thj");
    cons_detail::require_rowsums(out.matrix, -dim, "thj");
    out.certificate = sk_certify(out.matrix, s * s, CertifyMode::exact);
    cons_detail::require_member(out.certificate, "thj");
    if (trace(out.matrix.sym()) != s * dim) throw certification_error("thj: trace != s*n");
    out.inertia_note = cons_detail::binomial_note(Family::thj, s, out.expected_inertia);
    return out;
}

// Regular family with all rowsums -n and trace (s-2)*n. For odd s the
// back-circulant square carries the -J symbol exactly once on its diagonal and
// the blocks of the thj family work unchanged. For even s that square puts -J
// on the diagonal twice (the parity of a symmetric Latin square forces an even
// count), so the constant-diagonal square is used instead and a single
// diagonal block is negated; negation leaves the block-orthogonality algebra
// intact and moves the trace from s*n to (s-2)*n.
inline Construction build_thj1(i64 s, std::optional<i64> n = {}) {
    if (s < 2) throw precondition_error("thj1: s must be at least 2");
    const OrthFamily fam = orth_family(s, /*include_allones=*/true, n, /*order_floor=*/4);
    const i64 dim = fam.dimension;

    std::vector<IntMatrix> blocks(static_cast<std::size_t>(s + 1), IntMatrix(1, 1));
    blocks[1] = IntMatrix(dim, dim, -1); // -J
    for (i64 p = 2; p <= s; ++p)
        blocks[static_cast<std::size_t>(p)] = cons_detail::outer(fam.vectors[static_cast<std::size_t>(p - 1)], 1);

    IntSymMatrix assembled = s % 2 == 1
        ? cons_detail::assemble(back_circulant(s), blocks)
        : cons_detail::assemble(const_diag_symmetric(s), blocks, /*flip_diag_block=*/0);

    Construction out{PmOneMatrix(std::move(assembled)),
                     {Family::thj1, s, dim, fam.source, s % 2 == 1 ? "back_circulant" : "const_diag"},
                     {},
                     {binomial(s + 1, 2) - 1, s * dim - s * s, binomial(s, 2) + 1},
                     {}};
    cons_detail::require_rowsums(out.matrix, -dim, "thj1");
    out.certificate = sk_certify(out.matrix, s * s, CertifyMode::exact);
    cons_detail::require_member(out.certificate, "thj1");
    if (trace(out.matrix.sym()) != (s - 2) * dim) throw certification_error("thj1: trace != (s-2)*n");
    out.inertia_note = cons_detail::binomial_note(Family::thj1, s, out.expected_inertia);
    return out;
}

inline Construction build_family(Family f, i64 s, std::optional<i64> n = {}) {
    switch (f) {
        case Family::thkhn: return build_thkhn(s, n);
        case Family::thj: return build_thj(s, n);
        default: return build_thj1(s, n);
    }
}

struct CertifiedMatrix {
    PmOneMatrix matrix;
    i64 k = 0;
    SkCertificate certificate;
};

// Kronecker closure: members of S_k and S_l give a member of S_{k*l}. Both
// inputs are re-certified, and so is the product; a product failure would be
// an implementation bug and is fatal.
inline CertifiedMatrix sk_kron(const PmOneMatrix& a, i64 k, const PmOneMatrix& b, i64 l) {
    if (!sk_certify(a, k).is_member())
        throw precondition_error("sk_kron: first argument is not a certified member of S_" + std::to_string(k));
    if (!sk_certify(b, l).is_member())
        throw precondition_error("sk_kron: second argument is not a certified member of S_" + std::to_string(l));
    CertifiedMatrix out{PmOneMatrix(kron(a.sym(), b.sym())), k * l, {}};
    out.certificate = sk_certify(out.matrix, out.k);
    cons_detail::require_member(out.certificate, "sk_kron");
    return out;
}

// Doubling closure: K (x) (H_2 (x) A) with K = [[1,-1],[-1,1]]. Takes S_k to
// S_{2k} at four times the order, with zero rowsums and balanced inertia.
inline CertifiedMatrix sk_double(const PmOneMatrix& a, i64 k) {
    if (!sk_certify(a, k).is_member())
        throw precondition_error("sk_double: argument is not a certified member of S_" + std::to_string(k));
    const IntSymMatrix kk = IntSymMatrix::from_rows({{1, -1}, {-1, 1}});
    const IntSymMatrix h2 = IntSymMatrix::from_rows({{1, 1}, {1, -1}});
    CertifiedMatrix out{PmOneMatrix(kron(kk, kron(h2, a.sym()))), 2 * k, {}};
    out.certificate = sk_certify(out.matrix, out.k);
    cons_detail::require_member(out.certificate, "sk_double");
    cons_detail::require_rowsums(out.matrix, 0, "sk_double");
    if (out.certificate.inertia.plus != k || out.certificate.inertia.minus != k)
        throw certification_error("sk_double: inertia is not balanced at (k, k)");
    return out;
}

// A recipe tree naming how to realize a member of S_k from the closure
// operations and the seed families.
struct SkRecipe {
    std::string kind; // allones | sylvester | paley2 | thkhn | double | kron
    i64 param = 0;
    std::vector<SkRecipe> parts;

    std::string text() const {
        if (kind == "allones") return "allones(order=1)";
        if (kind == "sylvester") return "sylvester(m=" + std::to_string(param) + ")";
        if (kind == "paley2") return "paley2(q=" + std::to_string(param) + ")";
        if (kind == "thkhn") return "thkhn(s=" + std::to_string(param) + ")";
        if (kind == "double") return "double(" + parts.at(0).text() + ")";
        return "kron(" + parts.at(0).text() + ", " + parts.at(1).text() + ")";
    }
};

struct SkDecision {
    enum class Status { constructible, obstructed, unknown } status = Status::unknown;
    std::optional<SkRecipe> recipe;
    std::string reason;
};

inline SkDecision sk_constructible(i64 k) {
    if (k < 1) throw precondition_error("sk_constructible: k must be positive");
    SkDecision d;
    auto done = [&](SkRecipe r) {
        d.status = SkDecision::Status::constructible;
        d.recipe = std::move(r);
        d.reason = "recipe " + d.recipe->text();
        return d;
    };

    if (k == 1) return done({"allones", 0, {}});
    if (is_perfect_square(k)) return done({"thkhn", isqrt_floor(k), {}});
    if (k % 2 == 1) {
        d.status = SkDecision::Status::obstructed;
        d.reason = "k is odd and not a perfect square; such S_k are empty (trace forces a balanced "
                   "inertia, which an odd count cannot realize)";
        return d;
    }
    if ((k & (k - 1)) == 0) {
        int m = 0;
        while ((i64{1} << m) < k) ++m;
        return done({"sylvester", m, {}});
    }
    if (is_perfect_square(k / 2)) {
        const i64 s = isqrt_floor(k / 2);
        return done({"double", 0, {SkRecipe{"thkhn", s, {}}}});
    }
    for (i64 q = 5; 2 * (q + 1) <= k; q += 4) {
        if (!is_prime(q)) continue;
        if (k % (2 * (q + 1)) != 0) continue;
        const i64 rest = k / (2 * (q + 1));
        if (rest == 1) return done({"paley2", q, {}});
        if (is_perfect_square(rest)) {
            const i64 s = isqrt_floor(rest);
            return done({"kron", 0, {SkRecipe{"paley2", q, {}}, SkRecipe{"thkhn", s, {}}}});
        }
        if (rest % 2 == 0 && is_perfect_square(rest / 2)) {
            const i64 s = isqrt_floor(rest / 2);
            if (s == 1)
                return done({"kron", 0, {SkRecipe{"paley2", q, {}}, SkRecipe{"sylvester", 1, {}}}});
            return done({"kron", 0, {SkRecipe{"paley2", q, {}}, SkRecipe{"double", 0, {SkRecipe{"thkhn", s, {}}}}}});
        }
    }
    d.status = SkDecision::Status::unknown;
    d.reason = "no recipe covers k = " + std::to_string(k) + "; emptiness of S_k is open here";
    return d;
}

inline CertifiedMatrix sk_realize(const SkRecipe& r) {
    if (r.kind == "allones") {
        CertifiedMatrix out{PmOneMatrix::all_ones(1), 1, {}};
        out.certificate = sk_certify(out.matrix, 1);
        cons_detail::require_member(out.certificate, "sk_realize(allones)");
        return out;
    }
    if (r.kind == "sylvester") {
        const HadamardMatrix h = sylvester(static_cast<int>(r.param));
        CertifiedMatrix out{h.pm(), h.order(), {}};
        out.certificate = sk_certify(out.matrix, out.k);
        cons_detail::require_member(out.certificate, "sk_realize(sylvester)");
        return out;
    }
    if (r.kind == "paley2") {
        const HadamardMatrix h = paley2(r.param);
        CertifiedMatrix out{h.pm(), h.order(), {}};
        out.certificate = sk_certify(out.matrix, out.k);
        cons_detail::require_member(out.certificate, "sk_realize(paley2)");
        return out;
    }
    if (r.kind == "thkhn") {
        Construction c = build_thkhn(r.param);
        return {c.matrix, r.param * r.param, c.certificate};
    }
    if (r.kind == "double") {
        CertifiedMatrix sub = sk_realize(r.parts.at(0));
        return sk_double(sub.matrix, sub.k);
    }
    if (r.kind == "kron") {
        CertifiedMatrix a = sk_realize(r.parts.at(0));
        CertifiedMatrix b = sk_realize(r.parts.at(1));
        return sk_kron(a.matrix, a.k, b.matrix, b.k);
    }
    throw precondition_error("sk_realize: unknown recipe kind '" + r.kind + "'");
}

inline CertifiedMatrix sk_realize(i64 k) {
    const SkDecision d = sk_constructible(k);
    if (d.status != SkDecision::Status::constructible)
        throw precondition_error("sk_realize: " + d.reason);
    return sk_realize(*d.recipe);
}

} // namespace pmspec
