#pragma once

// Desk-scale exhaustive search for members of S_k at a fixed order, with
// algebraic feasibility filtering, interlacing-based pruning, and a
// signed-permutation canonical form for isomorph handling.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pmspec/common.hpp"
#include "pmspec/constructions.hpp"
#include "pmspec/int_matrix.hpp"
#include "pmspec/spectra.hpp"

namespace pmspec {

struct SearchConfig {
    i64 k = 0;
    i64 order = 0;
    i64 budget = 10'000'000;
    bool symmetry_reduction = true;
    std::string resume_token; // serialized frontier from an earlier run, or empty
};

enum class SearchStatus { found, exhausted, budget_exceeded };

inline std::string search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::exhausted: return "exhausted";
        default: return "budget_exceeded";
    }
}

struct Feasibility {
    bool feasible = false;
    std::string reason;                   // set when obstructed
    std::vector<std::string> constraints; // forced constraints when feasible
};

// Algebraic screens that run before any enumeration. Every obstruction comes
// with the one-line argument that makes it sound.
inline Feasibility feasibility_filter(i64 k, i64 n) {
    if (k < 1 || n < 1) throw precondition_error("feasibility_filter: k and order must be positive");
    Feasibility f;
    if (n < k) {
        f.reason = "order " + std::to_string(n) + " < k: an order-n matrix has at most n nonzero eigenvalues";
        return f;
    }
    if (k % 2 == 1 && !is_perfect_square(k)) {
        f.reason = "k odd and not a perfect square: trace = (n+ - n-)*n/sqrt(k) is an integer, so either "
                   "sqrt(k) is an integer or n+ = n-, and n+ = n- needs even k";
        return f;
    }
    if ((n * n) % k != 0) {
        f.reason = "k does not divide order^2: B^2 is an integer matrix whose nonzero eigenvalue n^2/k "
                   "would be a non-integral rational algebraic integer";
        return f;
    }
    f.feasible = true;
    if (is_perfect_square(k)) {
        f.constraints.push_back("trace(B)*sqrt(k)/n must be an integer d with |d| <= k and d = k (mod 2)");
    } else {
        f.constraints.push_back("trace(B) = 0 forced (balanced inertia; sqrt(k) irrational)");
    }
    return f;
}

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<PmOneMatrix> witness;
    i64 nodes_expanded = 0;
    std::vector<std::string> obstructions_applied;
    std::string resume_token; // nonempty iff status == budget_exceeded
};

namespace search_detail {

struct Position {
    i64 i, j;
};

// Upper-triangle row-major positions: row 0 fully, then row 1 from the
// diagonal, and so on. The leading principal minor of size r+1 completes
// exactly when (r, r) is assigned.
inline std::vector<Position> positions(i64 n) {
    std::vector<Position> out;
    for (i64 i = 0; i < n; ++i)
        for (i64 j = i; j < n; ++j) out.push_back({i, j});
    return out;
}

struct Frame {
    int cand_index = 0;
    int cand_count = 0;
};

inline std::string encode_token(const SearchConfig& cfg, const std::vector<Frame>& stack, i64 nodes,
                                bool descending) {
    std::ostringstream ss;
    ss << "v1 " << cfg.k << ' ' << cfg.order << ' ' << (cfg.symmetry_reduction ? 1 : 0) << ' ' << nodes << ' '
       << (descending ? 'd' : 'a') << ' ';
    for (const Frame& f : stack) ss << f.cand_index;
    return ss.str();
}

struct DecodedToken {
    std::vector<int> choices;
    i64 nodes = 0;
    bool descending = true;
};

inline DecodedToken decode_token(const std::string& token, const SearchConfig& cfg) {
    std::istringstream ss(token);
    std::string tag;
    i64 k = 0, order = 0, reduce = 0, nodes = 0;
    char phase = 'd';
    std::string digits;
    if (!(ss >> tag >> k >> order >> reduce >> nodes >> phase)) throw precondition_error("resume token: malformed");
    ss >> digits; // may be empty when the stack was empty
    if (tag != "v1") throw precondition_error("resume token: unknown version " + tag);
    if (phase != 'd' && phase != 'a') throw precondition_error("resume token: bad phase flag");
    if (k != cfg.k || order != cfg.order || (reduce != 0) != cfg.symmetry_reduction)
        throw precondition_error("resume token: does not match this configuration");
    DecodedToken out;
    out.nodes = nodes;
    out.descending = phase == 'd';
    for (char c : digits) {
        if (c != '0' && c != '1') throw precondition_error("resume token: bad choice digit");
        out.choices.push_back(c - '0');
    }
    return out;
}

} // namespace search_detail

// Depth-first completion of symmetric +-1 matrices of the given order, pruned
// by exact trace screens and Cauchy interlacing on completed leading minors,
// with an exact cubic-identity check at the leaves. With symmetry reduction
// the first row is normalized to all +1 and the tail diagonal is sorted;
// `exhausted` then still certifies emptiness for the whole order, because the
// reductions only discard signed-permutation/negation copies.
inline SearchResult search_sk(const SearchConfig& cfg) {
    const Feasibility feas = feasibility_filter(cfg.k, cfg.order);
    if (!feas.feasible)
        throw precondition_error("search_sk: configuration is obstructed: " + feas.reason);
    if (cfg.budget < 1) throw precondition_error("search_sk: budget must be positive");

    const i64 n = cfg.order;
    const i64 k = cfg.k;
    const auto pos = search_detail::positions(n);
    const i64 npos = static_cast<i64>(pos.size());

    SearchResult res;
    if (cfg.symmetry_reduction) {
        res.obstructions_applied.push_back(
            "row0-normalization: simultaneous column sign flips put +1 everywhere in row 0, and negation "
            "closure fixes the (0,0) entry; both preserve S_k membership");
        res.obstructions_applied.push_back(
            "diagonal-sort: a vertex permutation fixing index 0 sorts the remaining diagonal "
            "non-increasingly; simultaneous permutation preserves S_k membership");
    }
    res.obstructions_applied.push_back(
        "trace-screen: the diagonal must still be completable to an admissible trace "
        "(trace = d*n/sqrt(k) with integral d of the parity of k, or 0 when k is not a square)");
    res.obstructions_applied.push_back(
        "minor-interlacing: eigenvalues of a completed leading principal minor interlace those of the "
        "full matrix, so they must lie in [-n/sqrt(k), n/sqrt(k)] and respect the inertia budget");

    // Admissible traces and the inertia budget they imply.
    std::vector<i64> allowed_traces;
    i64 nplus_max = 0, nminus_max = 0;
    if (is_perfect_square(k)) {
        const i64 r = isqrt_floor(k);
        for (i64 d = -k; d <= k; ++d) {
            if ((d % 2 + 2) % 2 != (k % 2 + 2) % 2) continue;
            if ((d * n) % r != 0) continue;
            allowed_traces.push_back(d * n / r);
            nplus_max = std::max(nplus_max, (k + d) / 2);
            nminus_max = std::max(nminus_max, (k - d) / 2);
        }
    } else {
        allowed_traces.push_back(0);
        nplus_max = nminus_max = k / 2;
    }

    const double target = static_cast<double>(n) / std::sqrt(static_cast<double>(k));
    const double guard = 1e-7 * static_cast<double>(n);

    IntMatrix m(n, n, 0);
    std::vector<search_detail::Frame> stack;

    auto candidates = [&](i64 p) -> std::vector<i64> {
        const auto [i, j] = pos[static_cast<std::size_t>(p)];
        if (cfg.symmetry_reduction && i == 0) return {1}; // whole first row pinned
        if (cfg.symmetry_reduction && i == j && i >= 2 && m(i - 1, i - 1) == -1) return {-1};
        return {1, -1};
    };

    auto place = [&](i64 p, i64 v) {
        const auto [i, j] = pos[static_cast<std::size_t>(p)];
        m(i, j) = m(j, i) = v;
    };

    auto diag_prefix_trace = [&](i64 upto) { // sum of diagonal entries 0..upto
        i64 t = 0;
        for (i64 i = 0; i <= upto; ++i) t += m(i, i);
        return t;
    };

    // Screens evaluated right after position p is assigned. Only diagonal
    // placements can change their outcome, so others pass trivially.
    auto prune_ok = [&](i64 p) -> bool {
        const auto [i, j] = pos[static_cast<std::size_t>(p)];
        if (i != j) return true;
        const i64 partial = diag_prefix_trace(i);
        const i64 remaining = n - (i + 1);
        bool reachable = false;
        for (i64 t : allowed_traces) {
            const i64 delta = t - partial;
            if (delta >= -remaining && delta <= remaining && ((delta - remaining) % 2 == 0)) {
                reachable = true;
                break;
            }
        }
        if (!reachable) return false;
        const i64 r = i + 1; // completed minor size
        if (r >= 3) {
            std::vector<double> sub(static_cast<std::size_t>(r * r));
            for (i64 a = 0; a < r; ++a)
                for (i64 b = 0; b < r; ++b) sub[static_cast<std::size_t>(a * r + b)] = static_cast<double>(m(a, b));
            const auto ev = jacobi_eigenvalues(std::move(sub), static_cast<int>(r), 1e-11 * static_cast<double>(r));
            if (ev.front() > target + guard) return false;
            if (ev.back() < -target - guard) return false;
            i64 npos_count = 0, nneg_count = 0;
            for (double v : ev) {
                if (v > guard) ++npos_count;
                if (v < -guard) ++nneg_count;
            }
            if (npos_count > nplus_max || nneg_count > nminus_max) return false;
        }
        return true;
    };

    // Rebuild the stack from a resume token, or start fresh.
    i64 depth = 0;
    bool descend = true;
    if (!cfg.resume_token.empty()) {
        const auto tok = search_detail::decode_token(cfg.resume_token, cfg);
        res.nodes_expanded = tok.nodes;
        descend = tok.descending;
        for (int c : tok.choices) {
            const auto cands = candidates(depth);
            if (c >= static_cast<int>(cands.size())) throw precondition_error("resume token: choice out of range");
            place(depth, cands[static_cast<std::size_t>(c)]);
            stack.push_back({c, static_cast<int>(cands.size())});
            ++depth;
        }
    }

    // Iterative DFS. `descend` means: try to push the first candidate at
    // `depth`; otherwise advance the top frame or backtrack.
    while (true) {
        if (descend) {
            if (depth == npos) {
                // leaf: exact certificate
                if (minpoly_zero_pm_check(IntSymMatrix(m), n * n, k)) {
                    PmOneMatrix w{IntSymMatrix(m)};
                    const auto cert = sk_certify(w, k, CertifyMode::exact);
                    if (cert.is_member()) {
                        res.status = SearchStatus::found;
                        res.witness = std::move(w);
                        return res;
                    }
                }
                descend = false;
                continue;
            }
            const auto cands = candidates(depth);
            if (res.nodes_expanded >= cfg.budget) {
                res.status = SearchStatus::budget_exceeded;
                res.resume_token = search_detail::encode_token(cfg, stack, res.nodes_expanded, true);
                return res;
            }
            ++res.nodes_expanded;
            place(depth, cands[0]);
            stack.push_back({0, static_cast<int>(cands.size())});
            ++depth;
            descend = prune_ok(depth - 1);
            continue;
        }
        // backtrack / advance
        if (stack.empty()) {
            res.status = SearchStatus::exhausted;
            return res;
        }
        search_detail::Frame& top = stack.back();
        if (top.cand_index + 1 < top.cand_count) {
            if (res.nodes_expanded >= cfg.budget) {
                res.status = SearchStatus::budget_exceeded;
                res.resume_token = search_detail::encode_token(cfg, stack, res.nodes_expanded, false);
                return res;
            }
            ++res.nodes_expanded;
            ++top.cand_index;
            const auto cands = candidates(depth - 1);
            place(depth - 1, cands[static_cast<std::size_t>(top.cand_index)]);
            descend = prune_ok(depth - 1);
        } else {
            stack.pop_back();
            --depth;
        }
    }
}

// Lexicographically minimal representative of the signed-permutation orbit,
// by branch-and-bound over vertex orderings with the first row sign-normalized
// to all +1. The comparison key is the lower triangle read row by row, with
// -1 ordered below +1. Idempotent; capped at order 16 (the orbit walk is
// exponential).
inline PmOneMatrix canonical_form(const PmOneMatrix& b) {
    const i64 n = b.order();
    if (n > 16) throw precondition_error("canonical_form: order above the supported cap of 16");

    // key length: n(n+1)/2 entries of the transformed lower triangle
    const std::size_t key_len = static_cast<std::size_t>(n * (n + 1) / 2);
    std::vector<i64> best;     // empty = none yet
    std::vector<i64> current(key_len, 0);
    std::vector<i64> perm(static_cast<std::size_t>(n), -1);
    std::vector<i64> sign(static_cast<std::size_t>(n), 1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    // cmp carries the relation of the already-filled prefix to `best`:
    // -1 strictly less, 0 equal. When a descendant leaf replaces `best`, the
    // whole current path equals the new best, so the prefix relation resets
    // to 0 (tracked through a generation counter).
    long generation = 0;
    std::function<void(i64, std::size_t, int)> extend = [&](i64 d, std::size_t filled, int cmp) {
        if (d == n) {
            if (cmp < 0 || best.empty()) {
                best = current;
                ++generation;
            }
            return;
        }
        for (i64 cand = 0; cand < n; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            perm[static_cast<std::size_t>(d)] = cand;
            // sign fixed by the first chosen row
            sign[static_cast<std::size_t>(d)] = d == 0 ? 1 : b(perm[0], cand);
            std::size_t f = filled;
            int c = cmp;
            bool viable = true;
            for (i64 col = 0; col <= d && viable; ++col) {
                const i64 v = sign[static_cast<std::size_t>(d)] * sign[static_cast<std::size_t>(col)] *
                              b(cand, perm[static_cast<std::size_t>(col)]);
                current[f] = v;
                if (c == 0 && !best.empty()) {
                    if (v < best[f]) c = -1;
                    else if (v > best[f]) viable = false;
                }
                ++f;
            }
            if (viable) {
                used[static_cast<std::size_t>(cand)] = true;
                const long gen_before = generation;
                extend(d + 1, f, c);
                used[static_cast<std::size_t>(cand)] = false;
                if (generation != gen_before) cmp = 0;
            }
        }
    };
    extend(0, 0, 0);

    IntMatrix out(n, n);
    std::size_t f = 0;
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j <= i; ++j) out(i, j) = out(j, i) = best[f++];
    return PmOneMatrix(IntSymMatrix(std::move(out)));
}

} // namespace pmspec
