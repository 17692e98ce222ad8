#pragma once

// PMM and ADJ text formats.
//
// PMM (symmetric +-1 matrix):        ADJ (graph adjacency):
//   PMM 1                              ADJ 1
//   <order n>                          <order n>
//   n lines of n tokens `1`/`-1`       n lines of n tokens `0`/`1`
//
// LF line endings, single spaces. Readers are strict: unexpected tokens,
// asymmetry, or (for ADJ) a nonzero diagonal are rejected.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pmspec/common.hpp"
#include "pmspec/int_matrix.hpp"

namespace pmspec {

namespace io_detail {

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline IntSymMatrix parse_matrix_body(const std::vector<std::string>& lines,
                                      const std::string& magic,
                                      bool (*entry_ok)(i64)) {
    if (lines.size() < 2) throw parse_error(magic + ": truncated header");
    for (const auto& line : lines)
        if (line.find('\r') != std::string::npos)
            throw parse_error(magic + ": carriage return found; LF line endings required");
    if (lines[0] != magic + " 1") throw parse_error(magic + ": bad magic line '" + lines[0] + "'");
    i64 n = 0;
    {
        std::istringstream ss(lines[1]);
        if (!(ss >> n) || n <= 0) throw parse_error(magic + ": bad order line '" + lines[1] + "'");
        std::string rest;
        if (ss >> rest) throw parse_error(magic + ": trailing tokens on order line");
    }
    if (static_cast<i64>(lines.size()) < 2 + n) throw parse_error(magic + ": expected " + std::to_string(n) + " rows");
    IntMatrix m(n, n);
    for (i64 i = 0; i < n; ++i) {
        std::istringstream ss(lines[static_cast<std::size_t>(2 + i)]);
        for (i64 j = 0; j < n; ++j) {
            std::string tok;
            if (!(ss >> tok)) throw parse_error(magic + ": row " + std::to_string(i) + " too short");
            i64 v = 0;
            if (tok == "1") v = 1;
            else if (tok == "-1") v = -1;
            else if (tok == "0") v = 0;
            else throw parse_error(magic + ": bad token '" + tok + "'");
            if (!entry_ok(v)) throw parse_error(magic + ": token '" + tok + "' not allowed here");
            m(i, j) = v;
        }
        std::string rest;
        if (ss >> rest) throw parse_error(magic + ": row " + std::to_string(i) + " too long");
    }
    for (i64 i = 2 + n; i < static_cast<i64>(lines.size()); ++i)
        if (!lines[static_cast<std::size_t>(i)].empty())
            throw parse_error(magic + ": trailing content after matrix");
    if (!m.is_symmetric()) throw parse_error(magic + ": matrix is not symmetric");
    return IntSymMatrix(std::move(m));
}

} // namespace io_detail

inline std::string to_pmm(const PmOneMatrix& a) {
    std::string out = "PMM 1\n" + std::to_string(a.order()) + "\n";
    for (i64 i = 0; i < a.order(); ++i) {
        for (i64 j = 0; j < a.order(); ++j) {
            if (j) out += ' ';
            out += a(i, j) == 1 ? "1" : "-1";
        }
        out += '\n';
    }
    return out;
}

inline std::string to_adj(const Graph& g) {
    std::string out = "ADJ 1\n" + std::to_string(g.order()) + "\n";
    for (i64 i = 0; i < g.order(); ++i) {
        for (i64 j = 0; j < g.order(); ++j) {
            if (j) out += ' ';
            out += g(i, j) == 1 ? "1" : "0";
        }
        out += '\n';
    }
    return out;
}

inline PmOneMatrix pmm_from_string(const std::string& text) {
    auto lines = io_detail::split_lines(text);
    auto m = io_detail::parse_matrix_body(lines, "PMM", [](i64 v) { return v == 1 || v == -1; });
    return PmOneMatrix(std::move(m));
}

inline Graph adj_from_string(const std::string& text) {
    auto lines = io_detail::split_lines(text);
    auto m = io_detail::parse_matrix_body(lines, "ADJ", [](i64 v) { return v == 0 || v == 1; });
    for (i64 i = 0; i < m.order(); ++i)
        if (m(i, i) != 0) throw parse_error("ADJ: nonzero diagonal entry at row " + std::to_string(i));
    return Graph(std::move(m));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw precondition_error("cannot write file: " + path);
    out << content;
    if (!out) throw precondition_error("write failed: " + path);
}

inline PmOneMatrix read_pmm(const std::string& path) { return pmm_from_string(read_file(path)); }
inline Graph read_adj(const std::string& path) { return adj_from_string(read_file(path)); }
inline void write_pmm(const std::string& path, const PmOneMatrix& a) { write_file(path, to_pmm(a)); }
inline void write_adj(const std::string& path, const Graph& g) { write_file(path, to_adj(g)); }

} // namespace pmspec
