#pragma once

// The two symmetric Latin square families used by the block constructions:
// back-circulant squares (any size) and constant-diagonal symmetric squares
// (even size only).

#include <optional>
#include <string>
#include <vector>

#include "pmspec/common.hpp"

namespace pmspec {

// s x s array over symbols 1..s. Cells stored row-major, 0-based indexing;
// the 1-based construction formulas are localized in the builders below.
struct LatinSquare {
    i64 size = 0;
    std::vector<i64> cells;

    i64 at(i64 i, i64 j) const { return cells[static_cast<std::size_t>(i * size + j)]; }
    i64& at(i64 i, i64 j) { return cells[static_cast<std::size_t>(i * size + j)]; }
};

// l(i,j) = ((i+j) mod s) + 1 with 1-based i, j. Symmetric for every s.
inline LatinSquare back_circulant(i64 s) {
    if (s < 1) throw precondition_error("back_circulant: size must be positive");
    LatinSquare l{s, std::vector<i64>(static_cast<std::size_t>(s * s))};
    for (i64 i = 1; i <= s; ++i)
        for (i64 j = 1; j <= s; ++j) l.at(i - 1, j - 1) = ((i + j) % s) + 1;
    return l;
}

// Symmetric Latin square of even size s with the symbol s on the whole main
// diagonal. No such square exists for odd s: every symbol of a symmetric
// Latin square of odd order appears on the diagonal exactly once.
inline LatinSquare const_diag_symmetric(i64 s) {
    if (s < 2 || s % 2 != 0)
        throw precondition_error("const_diag_symmetric: constant-diagonal symmetric Latin square requires even size >= 2");
    LatinSquare l{s, std::vector<i64>(static_cast<std::size_t>(s * s))};
    for (i64 i = 1; i <= s; ++i) {
        for (i64 j = 1; j <= s; ++j) {
            i64 v;
            if (i == j) v = s;
            else if (i < s && j < s) v = ((i + j) % (s - 1)) + 1;
            else if (i == s) v = ((2 * j) % (s - 1)) + 1;
            else v = ((2 * i) % (s - 1)) + 1;
            l.at(i - 1, j - 1) = v;
        }
    }
    return l;
}

struct LatinReport {
    bool is_latin = false;
    bool is_symmetric = false;
    std::optional<i64> diagonal_constant;
    std::vector<std::string> failures;
};

inline LatinReport validate(const LatinSquare& l) {
    LatinReport rep;
    const i64 s = l.size;
    rep.is_latin = true;
    rep.is_symmetric = true;
    for (i64 i = 0; i < s; ++i) {
        std::vector<bool> row_seen(static_cast<std::size_t>(s + 1), false);
        std::vector<bool> col_seen(static_cast<std::size_t>(s + 1), false);
        for (i64 j = 0; j < s; ++j) {
            const i64 rv = l.at(i, j);
            const i64 cv = l.at(j, i);
            if (rv < 1 || rv > s) {
                rep.is_latin = false;
                rep.failures.push_back("cell (" + std::to_string(i) + "," + std::to_string(j) + ") out of symbol range");
                continue;
            }
            if (row_seen[static_cast<std::size_t>(rv)]) {
                rep.is_latin = false;
                rep.failures.push_back("row " + std::to_string(i) + " repeats symbol " + std::to_string(rv));
            }
            if (col_seen[static_cast<std::size_t>(cv)]) {
                rep.is_latin = false;
                rep.failures.push_back("column " + std::to_string(i) + " repeats symbol " + std::to_string(cv));
            }
            row_seen[static_cast<std::size_t>(rv)] = true;
            col_seen[static_cast<std::size_t>(cv)] = true;
            if (l.at(i, j) != l.at(j, i)) rep.is_symmetric = false;
        }
    }
    bool constant = s > 0;
    for (i64 i = 1; i < s; ++i)
        if (l.at(i, i) != l.at(0, 0)) constant = false;
    if (constant && s > 0) rep.diagonal_constant = l.at(0, 0);
    return rep;
}

inline std::string to_text(const LatinSquare& l) {
    std::string out;
    for (i64 i = 0; i < l.size; ++i) {
        for (i64 j = 0; j < l.size; ++j) {
            if (j) out += ' ';
            out += std::to_string(l.at(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace pmspec
