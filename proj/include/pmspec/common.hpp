#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pmspec {

// Error hierarchy. Everything thrown by this library derives from pmspec::error
// so callers can map failures to exit codes in one place.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Integer arithmetic left the representable range. Always a hard error; entries
// are never allowed to wrap.
class overflow_error : public error {
public:
    explicit overflow_error(const std::string& msg) : error("overflow: " + msg) {}
};

// A documented precondition does not hold (bad sizes, bad parameters, malformed input).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// File parsing failure (PMM/ADJ readers).
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error("parse error: " + msg) {}
};

// An internally rebuilt certificate failed. Indicates a bug in a construction,
// never a user error.
class certification_error : public error {
public:
    explicit certification_error(const std::string& msg) : error("certification failure: " + msg) {}
};

// The iterative eigensolver did not reach its residual target.
class convergence_error : public error {
public:
    explicit convergence_error(const std::string& msg) : error(msg) {}
};

using i64 = std::int64_t;

inline constexpr const char* kToolVersion = "0.1.0";

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error(std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw overflow_error(std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error(std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

// binom(n, k) with overflow checking; n, k small in all callers.
inline i64 binomial(i64 n, i64 k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i64 r = 1;
    for (i64 i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;
    }
    return r;
}

// Minimal exact rational on i64, used for bound values and three-point spectra.
// Only construction, normalization and comparison are needed; no full arithmetic.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n, i64 d = 1) : num(n), den(d) {
        if (den == 0) throw precondition_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool is_integer() const { return den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline i64 isqrt_floor(i64 n) {
    if (n < 0) throw precondition_error("isqrt_floor: negative input");
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    const i64 r = isqrt_floor(n);
    return r * r == n;
}

// Deterministic trial-division primality; all callers stay in desk range.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// FNV-1a, used for input/output digests in run manifests.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& s) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s.data(), s.size());
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

} // namespace pmspec
