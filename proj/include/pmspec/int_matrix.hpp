#pragma once

// Exact integer dense matrix kernel: the ground everything else stands on.
// All arithmetic is overflow-checked 64-bit; symmetry and entry-range
// invariants are enforced at construction, not per access.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pmspec/common.hpp"

namespace pmspec {

// General dense integer matrix, row-major. Used internally where results of
// products may be non-symmetric or out of the +-1 range.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(i64 rows, i64 cols, i64 fill = 0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {
        if (rows <= 0 || cols <= 0) throw precondition_error("matrix dimensions must be positive");
    }

    static IntMatrix identity(i64 n) {
        IntMatrix m(n, n);
        for (i64 i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix ones(i64 n) { return IntMatrix(n, n, 1); }

    i64 rows() const { return rows_; }
    i64 cols() const { return cols_; }

    i64& operator()(i64 i, i64 j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    i64 operator()(i64 i, i64 j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (i64 i = 0; i < rows_; ++i)
            for (i64 j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    const std::vector<i64>& data() const { return data_; }

private:
    i64 rows_ = 0;
    i64 cols_ = 0;
    std::vector<i64> data_;
};

inline IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw precondition_error("mat_add: shape mismatch");
    IntMatrix r(a.rows(), a.cols());
    for (i64 i = 0; i < a.rows(); ++i)
        for (i64 j = 0; j < a.cols(); ++j) r(i, j) = checked_add(a(i, j), b(i, j));
    return r;
}

inline IntMatrix mat_sub(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw precondition_error("mat_sub: shape mismatch");
    IntMatrix r(a.rows(), a.cols());
    for (i64 i = 0; i < a.rows(); ++i)
        for (i64 j = 0; j < a.cols(); ++j) r(i, j) = checked_sub(a(i, j), b(i, j));
    return r;
}

inline IntMatrix mat_scale(const IntMatrix& a, i64 c) {
    IntMatrix r(a.rows(), a.cols());
    for (i64 i = 0; i < a.rows(); ++i)
        for (i64 j = 0; j < a.cols(); ++j) r(i, j) = checked_mul(c, a(i, j));
    return r;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw precondition_error("mat_mul: inner dimensions differ");
    IntMatrix r(a.rows(), b.cols());
    for (i64 i = 0; i < a.rows(); ++i) {
        for (i64 k = 0; k < a.cols(); ++k) {
            const i64 aik = a(i, k);
            if (aik == 0) continue;
            for (i64 j = 0; j < b.cols(); ++j) {
                r(i, j) = checked_add(r(i, j), checked_mul(aik, b(k, j)));
            }
        }
    }
    return r;
}

// e restricted to 1..4: nothing in this library needs a higher power, and the
// bound keeps the checked-overflow contract meaningful.
inline IntMatrix mat_pow(const IntMatrix& a, int e) {
    if (!a.is_square()) throw precondition_error("mat_pow: matrix must be square");
    if (e < 1 || e > 4) throw precondition_error("mat_pow: exponent must be in 1..4");
    IntMatrix r = a;
    for (int i = 1; i < e; ++i) r = mat_mul(r, a);
    return r;
}

inline i64 trace(const IntMatrix& a) {
    if (!a.is_square()) throw precondition_error("trace: matrix must be square");
    i64 t = 0;
    for (i64 i = 0; i < a.rows(); ++i) t = checked_add(t, a(i, i));
    return t;
}

inline std::vector<i64> rowsums(const IntMatrix& a) {
    std::vector<i64> r(static_cast<std::size_t>(a.rows()), 0);
    for (i64 i = 0; i < a.rows(); ++i) {
        i64 s = 0;
        for (i64 j = 0; j < a.cols(); ++j) s = checked_add(s, a(i, j));
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

// Kronecker product; entry ((i,p),(j,q)) = a(i,j)*b(p,q).
inline IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix r(checked_mul(a.rows(), b.rows()), checked_mul(a.cols(), b.cols()));
    for (i64 i = 0; i < a.rows(); ++i)
        for (i64 j = 0; j < a.cols(); ++j) {
            const i64 aij = a(i, j);
            for (i64 p = 0; p < b.rows(); ++p)
                for (i64 q = 0; q < b.cols(); ++q)
                    r(i * b.rows() + p, j * b.cols() + q) = checked_mul(aij, b(p, q));
        }
    return r;
}

// Symmetric square integer matrix; symmetry checked once at construction.
class IntSymMatrix {
public:
    IntSymMatrix() = default;

    explicit IntSymMatrix(IntMatrix m) : m_(std::move(m)) {
        if (!m_.is_square()) throw precondition_error("IntSymMatrix: matrix must be square");
        if (!m_.is_symmetric()) throw precondition_error("IntSymMatrix: matrix must be symmetric");
    }

    static IntSymMatrix from_rows(const std::vector<std::vector<i64>>& rows) {
        const i64 n = static_cast<i64>(rows.size());
        IntMatrix m(n, n);
        for (i64 i = 0; i < n; ++i) {
            if (static_cast<i64>(rows[static_cast<std::size_t>(i)].size()) != n)
                throw precondition_error("from_rows: ragged rows");
            for (i64 j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return IntSymMatrix(std::move(m));
    }

    // Builds entries from a callable f(i, j) evaluated on the upper triangle
    // and mirrored, so the result is symmetric by construction.
    static IntSymMatrix build(i64 n, const std::function<i64(i64, i64)>& f) {
        IntMatrix m(n, n);
        for (i64 i = 0; i < n; ++i)
            for (i64 j = i; j < n; ++j) m(i, j) = m(j, i) = f(i, j);
        return IntSymMatrix(std::move(m));
    }

    static IntSymMatrix identity(i64 n) { return IntSymMatrix(IntMatrix::identity(n)); }
    static IntSymMatrix ones(i64 n) { return IntSymMatrix(IntMatrix::ones(n)); }

    i64 order() const { return m_.rows(); }
    i64 operator()(i64 i, i64 j) const { return m_(i, j); }
    const IntMatrix& mat() const { return m_; }

    bool operator==(const IntSymMatrix& o) const { return m_ == o.m_; }
    bool operator!=(const IntSymMatrix& o) const { return !(*this == o); }

private:
    IntMatrix m_;
};

inline IntSymMatrix kron(const IntSymMatrix& a, const IntSymMatrix& b) {
    return IntSymMatrix(kron(a.mat(), b.mat()));
}

inline i64 trace(const IntSymMatrix& a) { return trace(a.mat()); }
inline std::vector<i64> rowsums(const IntSymMatrix& a) { return rowsums(a.mat()); }
inline IntMatrix mat_pow(const IntSymMatrix& a, int e) { return mat_pow(a.mat(), e); }

// Symmetric matrix with every entry -1 or +1.
class PmOneMatrix {
public:
    PmOneMatrix() = default;

    explicit PmOneMatrix(IntSymMatrix m) : m_(std::move(m)) {
        for (i64 i = 0; i < m_.order(); ++i)
            for (i64 j = 0; j < m_.order(); ++j)
                if (m_(i, j) != 1 && m_(i, j) != -1)
                    throw precondition_error("PmOneMatrix: entries must be -1 or +1");
    }

    static PmOneMatrix all_ones(i64 n) { return PmOneMatrix(IntSymMatrix::ones(n)); }

    i64 order() const { return m_.order(); }
    i64 operator()(i64 i, i64 j) const { return m_(i, j); }
    const IntSymMatrix& sym() const { return m_; }
    const IntMatrix& mat() const { return m_.mat(); }

    PmOneMatrix negated() const {
        return PmOneMatrix(IntSymMatrix(mat_scale(m_.mat(), -1)));
    }

    bool operator==(const PmOneMatrix& o) const { return m_ == o.m_; }
    bool operator!=(const PmOneMatrix& o) const { return !(*this == o); }

private:
    IntSymMatrix m_;
};

// 0/1 adjacency matrix with zero diagonal.
class Graph {
public:
    Graph() = default;

    explicit Graph(IntSymMatrix m) : m_(std::move(m)) {
        for (i64 i = 0; i < m_.order(); ++i) {
            if (m_(i, i) != 0) throw precondition_error("Graph: diagonal must be zero");
            for (i64 j = 0; j < m_.order(); ++j)
                if (m_(i, j) != 0 && m_(i, j) != 1)
                    throw precondition_error("Graph: entries must be 0 or 1");
        }
    }

    static Graph complete(i64 n) {
        return Graph(IntSymMatrix(mat_sub(IntMatrix::ones(n), IntMatrix::identity(n))));
    }

    static Graph edgeless(i64 n) { return Graph(IntSymMatrix(IntMatrix(n, n, 0))); }

    i64 order() const { return m_.order(); }
    i64 operator()(i64 i, i64 j) const { return m_(i, j); }
    const IntSymMatrix& sym() const { return m_; }
    const IntMatrix& mat() const { return m_.mat(); }

    bool operator==(const Graph& o) const { return m_ == o.m_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    IntSymMatrix m_;
};

// Simultaneous row/column permutation combined with simultaneous sign changes:
// result(i,j) = signs[i]*signs[j]*a(perm[i], perm[j]). Leaves the singular
// value multiset untouched.
inline PmOneMatrix signed_permute(const PmOneMatrix& a,
                                  const std::vector<i64>& perm,
                                  const std::vector<i64>& signs) {
    const i64 n = a.order();
    if (static_cast<i64>(perm.size()) != n || static_cast<i64>(signs.size()) != n)
        throw precondition_error("signed_permute: permutation/sign length mismatch");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (i64 p : perm) {
        if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)])
            throw precondition_error("signed_permute: not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    for (i64 s : signs)
        if (s != 1 && s != -1) throw precondition_error("signed_permute: signs must be -1 or +1");
    IntMatrix r(n, n);
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j)
            r(i, j) = signs[static_cast<std::size_t>(i)] * signs[static_cast<std::size_t>(j)] *
                      a(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return PmOneMatrix(IntSymMatrix(std::move(r)));
}

// Exact certificate that every eigenvalue of b lies in {0, +sqrt(num/den),
// -sqrt(num/den)}: true iff den*B^3 == num*B entrywise.
inline bool minpoly_zero_pm_check(const IntSymMatrix& b, i64 num, i64 den) {
    if (num <= 0 || den <= 0) throw precondition_error("minpoly_zero_pm_check: num and den must be positive");
    const IntMatrix b3 = mat_pow(b, 3);
    return mat_scale(b3, den) == mat_scale(b.mat(), num);
}

} // namespace pmspec
