#pragma once

// Brute-force verification harness: exhaustive enumeration of all labeled
// graphs at small orders, random sampling at larger ones, and checks for
// every graph-quantified inequality the library relies on. A violation dumps
// its witness in ADJ format; proved statements must come back clean.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pmspec/common.hpp"
#include "pmspec/int_matrix.hpp"
#include "pmspec/matrix_io.hpp"
#include "pmspec/spectra.hpp"

namespace pmspec {

struct PropertyRun {
    std::string property_name;
    std::string universe;
    i64 graphs_checked = 0;
    std::vector<std::string> violations;
    double tolerance = 0;

    bool clean() const { return violations.empty(); }
};

namespace lab_detail {

constexpr double kTol = 1e-7;

inline i64 edge_count(i64 n) { return n * (n - 1) / 2; }

// Fills a flat row-major double buffer from an edge bitmask (upper-triangle
// row-major bit order).
inline void mask_to_buffer(i64 n, std::uint64_t mask, std::vector<double>& buf) {
    buf.assign(static_cast<std::size_t>(n * n), 0.0);
    i64 bit = 0;
    for (i64 i = 0; i < n; ++i)
        for (i64 j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) {
                buf[static_cast<std::size_t>(i * n + j)] = 1.0;
                buf[static_cast<std::size_t>(j * n + i)] = 1.0;
            }
}

inline std::uint64_t complement_mask(i64 n, std::uint64_t mask) {
    const i64 e = edge_count(n);
    return ~mask & ((std::uint64_t{1} << e) - 1);
}

inline Graph mask_to_graph(i64 n, std::uint64_t mask) {
    IntMatrix m(n, n);
    i64 bit = 0;
    for (i64 i = 0; i < n; ++i)
        for (i64 j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) m(i, j) = m(j, i) = 1;
    return Graph(IntSymMatrix(std::move(m)));
}

inline std::string witness(i64 n, std::uint64_t mask, const std::string& what) {
    return what + "\n" + to_adj(mask_to_graph(n, mask));
}

inline std::vector<double> eigen_of_mask(i64 n, std::uint64_t mask) {
    std::vector<double> buf;
    mask_to_buffer(n, mask, buf);
    return jacobi_eigenvalues(std::move(buf), static_cast<int>(n), 1e-11 * static_cast<double>(n));
}

inline std::uint64_t random_mask(i64 n, double p, std::mt19937_64& rng) {
    std::uint64_t mask = 0;
    std::bernoulli_distribution coin(p);
    for (i64 b = 0; b < edge_count(n); ++b)
        if (coin(rng)) mask |= std::uint64_t{1} << b;
    return mask;
}

} // namespace lab_detail

// Streams every labeled graph on n vertices exactly once (2^(n(n-1)/2) of
// them), as edge bitmasks. n is capped at 7.
template <class F>
inline void enumerate_graphs(i64 n, F&& visit) {
    if (n < 1 || n > 7) throw precondition_error("enumerate_graphs: order must be in 1..7");
    const std::uint64_t total = std::uint64_t{1} << lab_detail::edge_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(mask);
}

// lambda_k(G) >= -1 and lambda_{n-k+1}(G) <= 0 for every graph whose order
// reaches the Ramsey threshold binom(2k-1, k-1). Exhaustive when the
// threshold fits under order 7, random otherwise.
inline PropertyRun check_lob(i64 k, i64 n_max, i64 samples = 10000, std::uint64_t seed = 0) {
    if (k < 2) throw precondition_error("check_lob: k must be at least 2");
    const i64 threshold = binomial(2 * k - 1, k - 1);
    PropertyRun run;
    run.property_name = "lob(k=" + std::to_string(k) + ")";
    run.tolerance = lab_detail::kTol;

    if (threshold <= n_max && n_max <= 7) {
        run.universe = "exhaustive orders " + std::to_string(threshold) + ".." + std::to_string(n_max);
        for (i64 n = threshold; n <= n_max; ++n) {
            std::vector<double> buf;
            enumerate_graphs(n, [&](std::uint64_t mask) {
                lab_detail::mask_to_buffer(n, mask, buf);
                std::vector<double> work = buf;
                const auto ev = jacobi_eigenvalues(std::move(work), static_cast<int>(n), 1e-11 * static_cast<double>(n));
                ++run.graphs_checked;
                const double lk = ev[static_cast<std::size_t>(k - 1)];
                const double bottom = ev[static_cast<std::size_t>(n - k)];
                if (lk < -1.0 - run.tolerance)
                    run.violations.push_back(lab_detail::witness(n, mask, "lambda_k < -1"));
                if (bottom > run.tolerance)
                    run.violations.push_back(lab_detail::witness(n, mask, "lambda_{n-k+1} > 0"));
            });
        }
        return run;
    }

    const i64 n = std::max<i64>(threshold, 12);
    run.universe = "random order " + std::to_string(n) + ", " + std::to_string(samples) +
                   " samples, p=1/2, seed " + std::to_string(seed);
    std::mt19937_64 rng(seed);
    for (i64 s = 0; s < samples; ++s) {
        const std::uint64_t mask = lab_detail::random_mask(n, 0.5, rng);
        const auto ev = lab_detail::eigen_of_mask(n, mask);
        ++run.graphs_checked;
        if (ev[static_cast<std::size_t>(k - 1)] < -1.0 - run.tolerance)
            run.violations.push_back(lab_detail::witness(n, mask, "lambda_k < -1"));
        if (ev[static_cast<std::size_t>(n - k)] > run.tolerance)
            run.violations.push_back(lab_detail::witness(n, mask, "lambda_{n-k+1} > 0"));
    }
    return run;
}

// Weyl corollaries: lambda_k(G) + lambda_{n-k+2}(complement G) <= -1 for all
// graphs and 2 <= k <= n (exhaustive up to order min(n_max, 7)); and zeroing
// the diagonal of a symmetric 0/1 matrix lowers each eigenvalue by at most 1
// (exhaustive order <= 4, random beyond).
inline PropertyRun check_weyl(i64 n_max, i64 samples = 2000, std::uint64_t seed = 0) {
    PropertyRun run;
    run.property_name = "weyl";
    run.tolerance = lab_detail::kTol;
    const i64 cap = std::min<i64>(n_max, 7);
    run.universe = "exhaustive orders 2.." + std::to_string(cap) + " plus random diagonal tests";

    for (i64 n = 2; n <= cap; ++n) {
        enumerate_graphs(n, [&](std::uint64_t mask) {
            const auto ev = lab_detail::eigen_of_mask(n, mask);
            const auto evc = lab_detail::eigen_of_mask(n, lab_detail::complement_mask(n, mask));
            ++run.graphs_checked;
            for (i64 k = 2; k <= n; ++k) {
                const double sum = ev[static_cast<std::size_t>(k - 1)] + evc[static_cast<std::size_t>(n - k + 1)];
                if (sum > -1.0 + run.tolerance) {
                    run.violations.push_back(
                        lab_detail::witness(n, mask, "lambda_k(G)+lambda_{n-k+2}(comp) > -1 at k=" + std::to_string(k)));
                    break;
                }
            }
        });
    }

    // diagonal-zeroing penalty on symmetric 0/1 matrices with free diagonal
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (i64 s = 0; s < samples; ++s) {
        const i64 n = 2 + static_cast<i64>(rng() % 7); // orders 2..8
        std::vector<double> with_diag(static_cast<std::size_t>(n * n), 0.0);
        for (i64 i = 0; i < n; ++i)
            for (i64 j = i; j < n; ++j) {
                const double v = coin(rng) ? 1.0 : 0.0;
                with_diag[static_cast<std::size_t>(i * n + j)] = v;
                with_diag[static_cast<std::size_t>(j * n + i)] = v;
            }
        std::vector<double> zeroed = with_diag;
        for (i64 i = 0; i < n; ++i) zeroed[static_cast<std::size_t>(i * n + i)] = 0.0;
        const auto ev_full = jacobi_eigenvalues(std::move(with_diag), static_cast<int>(n), 1e-11 * static_cast<double>(n));
        const auto ev_zero = jacobi_eigenvalues(std::move(zeroed), static_cast<int>(n), 1e-11 * static_cast<double>(n));
        ++run.graphs_checked;
        for (i64 kk = 0; kk < n; ++kk)
            if (ev_zero[static_cast<std::size_t>(kk)] < ev_full[static_cast<std::size_t>(kk)] - 1.0 - run.tolerance)
                run.violations.push_back("diagonal zeroing dropped eigenvalue " + std::to_string(kk + 1) +
                                         " by more than 1 (order " + std::to_string(n) + ", seed sample " +
                                         std::to_string(s) + ")");
    }
    return run;
}

// Per-graph singular bound lambda_k <= lambda*_k <= n/(2 sqrt(k-1)), plus the
// extremal-function inequality max lambda_k + 1 <= max |lambda_{n-k+2}|
// (asserted on universe maxima, in both index conventions).
inline PropertyRun check_th1_spro(i64 n_max) {
    PropertyRun run;
    run.property_name = "th1_spro";
    run.tolerance = lab_detail::kTol;
    const i64 cap = std::min<i64>(n_max, 7);
    run.universe = "exhaustive orders 2.." + std::to_string(cap);

    for (i64 n = 2; n <= cap; ++n) {
        std::vector<double> max_lambda(static_cast<std::size_t>(n + 1), -1e300);
        std::vector<double> max_abs_bottom2(static_cast<std::size_t>(n + 1), 0.0); // index n-k+2
        std::vector<double> max_abs_bottom1(static_cast<std::size_t>(n + 1), 0.0); // index n-k+1
        enumerate_graphs(n, [&](std::uint64_t mask) {
            const auto ev = lab_detail::eigen_of_mask(n, mask);
            std::vector<double> sv(ev.size());
            for (std::size_t i = 0; i < ev.size(); ++i) sv[i] = std::abs(ev[i]);
            std::sort(sv.begin(), sv.end(), std::greater<double>());
            ++run.graphs_checked;
            for (i64 k = 2; k <= n; ++k) {
                const double lk = ev[static_cast<std::size_t>(k - 1)];
                const double svk = sv[static_cast<std::size_t>(k - 1)];
                const double cap_k = static_cast<double>(n) / (2.0 * std::sqrt(static_cast<double>(k - 1)));
                if (lk > svk + run.tolerance || svk > cap_k + run.tolerance) {
                    run.violations.push_back(lab_detail::witness(n, mask, "singular bound failed at k=" + std::to_string(k)));
                }
                max_lambda[static_cast<std::size_t>(k)] = std::max(max_lambda[static_cast<std::size_t>(k)], lk);
                max_abs_bottom2[static_cast<std::size_t>(k)] =
                    std::max(max_abs_bottom2[static_cast<std::size_t>(k)], std::abs(ev[static_cast<std::size_t>(n - k + 1)]));
                max_abs_bottom1[static_cast<std::size_t>(k)] =
                    std::max(max_abs_bottom1[static_cast<std::size_t>(k)], std::abs(ev[static_cast<std::size_t>(n - k)]));
            }
        });
        for (i64 k = 2; k <= n; ++k) {
            if (max_lambda[static_cast<std::size_t>(k)] + 1.0 >
                max_abs_bottom2[static_cast<std::size_t>(k)] + run.tolerance)
                run.violations.push_back("universe maxima violate max lambda_k + 1 <= max |lambda_{n-k+2}| at n=" +
                                         std::to_string(n) + ", k=" + std::to_string(k));
            if (max_lambda[static_cast<std::size_t>(k)] + 1.0 >
                max_abs_bottom1[static_cast<std::size_t>(k)] + run.tolerance)
                run.violations.push_back("universe maxima violate max lambda_k + 1 <= max |lambda_{n-k+1}| at n=" +
                                         std::to_string(n) + ", k=" + std::to_string(k));
        }
    }
    return run;
}

// Ky Fan ceiling (exhaustive, every k) and the two Nordhaus-Gaddum upper
// bounds under their order premises: the top-end bound on a random order-30
// sample at k=2, the bottom-end bound exhaustively at k=1, order 4.
inline PropertyRun check_ng_kyfan(i64 n_max, i64 samples = 200, std::uint64_t seed = 0) {
    PropertyRun run;
    run.property_name = "ng_kyfan";
    run.tolerance = lab_detail::kTol;
    const i64 cap = std::min<i64>(n_max, 6);
    run.universe = "exhaustive orders 1.." + std::to_string(cap) + " for the Ky Fan ceiling; random order 30 (k=2) and exhaustive order 4 (k=1) for the complement bounds";

    for (i64 n = 1; n <= cap; ++n) {
        enumerate_graphs(n, [&](std::uint64_t mask) {
            const auto ev = lab_detail::eigen_of_mask(n, mask);
            std::vector<double> sv(ev.size());
            for (std::size_t i = 0; i < ev.size(); ++i) sv[i] = std::abs(ev[i]);
            std::sort(sv.begin(), sv.end(), std::greater<double>());
            ++run.graphs_checked;
            double acc = 0;
            for (i64 k = 1; k <= n; ++k) {
                acc += sv[static_cast<std::size_t>(k - 1)];
                const double ceiling = 0.5 * (1.0 + std::sqrt(static_cast<double>(k))) * static_cast<double>(n);
                if (acc > ceiling + run.tolerance)
                    run.violations.push_back(lab_detail::witness(n, mask, "Ky Fan ceiling failed at k=" + std::to_string(k)));
            }
        });
    }

    {
        const i64 n = 30; // meets the order premise for k=2
        std::mt19937_64 rng(seed);
        for (i64 s = 0; s < samples; ++s) {
            std::vector<double> buf(static_cast<std::size_t>(n * n), 0.0);
            std::bernoulli_distribution coin(0.5);
            for (i64 i = 0; i < n; ++i)
                for (i64 j = i + 1; j < n; ++j) {
                    const double v = coin(rng) ? 1.0 : 0.0;
                    buf[static_cast<std::size_t>(i * n + j)] = v;
                    buf[static_cast<std::size_t>(j * n + i)] = v;
                }
            std::vector<double> cbuf(static_cast<std::size_t>(n * n), 0.0);
            for (i64 i = 0; i < n; ++i)
                for (i64 j = 0; j < n; ++j)
                    if (i != j) cbuf[static_cast<std::size_t>(i * n + j)] = 1.0 - buf[static_cast<std::size_t>(i * n + j)];
            const auto ev = jacobi_eigenvalues(std::move(buf), static_cast<int>(n), 1e-10 * static_cast<double>(n));
            const auto evc = jacobi_eigenvalues(std::move(cbuf), static_cast<int>(n), 1e-10 * static_cast<double>(n));
            ++run.graphs_checked;
            const double bound = static_cast<double>(n) / std::sqrt(2.0) - 1.0;
            if (ev[1] + evc[1] > bound + run.tolerance)
                run.violations.push_back("top-end Nordhaus-Gaddum bound failed at k=2, order 30, sample " + std::to_string(s));
        }
    }

    {
        const i64 n = 4; // meets the order premise 4^k at k=1
        enumerate_graphs(n, [&](std::uint64_t mask) {
            const auto ev = lab_detail::eigen_of_mask(n, mask);
            const auto evc = lab_detail::eigen_of_mask(n, lab_detail::complement_mask(n, mask));
            ++run.graphs_checked;
            const double bound = static_cast<double>(n) / std::sqrt(2.0) + 1.0;
            if (std::abs(ev[static_cast<std::size_t>(n - 1)]) + std::abs(evc[static_cast<std::size_t>(n - 1)]) >
                bound + run.tolerance)
                run.violations.push_back(lab_detail::witness(n, mask, "bottom-end Nordhaus-Gaddum bound failed at k=1"));
        });
    }
    return run;
}

} // namespace pmspec
