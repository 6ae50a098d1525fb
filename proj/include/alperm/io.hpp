#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "alperm/matrix.hpp"

namespace alperm {

enum class MatrixFormat {
    dense,  // n rows of n comma-separated values
    upper,  // row i holds the diagonal-and-above entries; mirrored on read
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline double parse_entry(const std::string& token, int row, int col) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    while (end && *end == ' ') ++end;
    if (end == begin || (end && *end != '\0'))
        throw std::invalid_argument("matrix csv: bad entry at row " + std::to_string(row + 1) +
                                    ", column " + std::to_string(col + 1) + ": '" + token + "'");
    if (!std::isfinite(v))
        throw std::invalid_argument("matrix csv: non-finite entry at row " + std::to_string(row + 1) +
                                    ", column " + std::to_string(col + 1));
    return v;
}

inline std::vector<std::vector<double>> parse_rows(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto tokens = split_csv_line(line);
        std::vector<double> row;
        row.reserve(tokens.size());
        for (std::size_t c = 0; c < tokens.size(); ++c)
            row.push_back(parse_entry(tokens[c], static_cast<int>(rows.size()), static_cast<int>(c)));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("matrix csv: no rows");
    return rows;
}

}  // namespace detail

inline Matrix parse_matrix_csv(const std::string& text, MatrixFormat format) {
    const auto rows = detail::parse_rows(text);
    const int n = static_cast<int>(format == MatrixFormat::dense ? rows[0].size() : rows.size());
    if (format == MatrixFormat::dense) {
        if (static_cast<int>(rows.size()) != n)
            throw std::invalid_argument("matrix csv: expected a square layout, got " +
                                        std::to_string(rows.size()) + " rows of " + std::to_string(n));
        Matrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw std::invalid_argument("matrix csv: row " + std::to_string(i + 1) +
                                            " has " + std::to_string(rows[i].size()) + " entries, expected " +
                                            std::to_string(n));
            for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    // upper-triangular-symmetric: row i carries entries (i,i)..(i,n-1)
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n - i)
            throw std::invalid_argument("matrix csv: upper-triangular row " + std::to_string(i + 1) +
                                        " has " + std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(n - i));
        for (int j = i; j < n; ++j) {
            m(i, j) = rows[i][j - i];
            m(j, i) = rows[i][j - i];
        }
    }
    return m;
}

inline Matrix read_matrix_csv(const std::string& path, MatrixFormat format) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_csv(buf.str(), format);
}

/// Dense CSV serialization with round-trippable precision. Only real
/// matrices are representable in the file formats.
inline std::string format_matrix_csv(const Matrix& m) {
    if (!m.is_real()) throw std::invalid_argument("format_matrix_csv: matrix has imaginary entries");
    std::string out;
    char buf[64];
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m(i, j).real());
            out += buf;
            out += (j + 1 == m.n()) ? '\n' : ',';
        }
    }
    return out;
}

inline void write_matrix_csv(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open matrix file for writing: " + path);
    out << format_matrix_csv(m);
}

/// Scalar given as "re" or "re,im".
inline Complex parse_complex(const std::string& text) {
    const auto parts = detail::split_csv_line(text);
    if (parts.empty() || parts.size() > 2)
        throw std::invalid_argument("scalar: expected 're' or 're,im', got '" + text + "'");
    const double re = detail::parse_entry(parts[0], 0, 0);
    const double im = parts.size() == 2 ? detail::parse_entry(parts[1], 0, 1) : 0.0;
    return Complex{re, im};
}

}  // namespace alperm
