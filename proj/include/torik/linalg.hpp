#pragma once

#include <optional>
#include <vector>

#include "torik/core.hpp"

namespace torik {
namespace linalg {

using Mat = std::vector<std::vector<Int>>;

inline Mat from_rows(const std::vector<CharVec>& rows) {
    Mat m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        m[i].assign(rows[i].begin(), rows[i].end());
    return m;
}

inline Mat from_columns(const std::vector<CharVec>& cols) {
    if (cols.empty()) return {};
    Mat m(cols.front().size(), std::vector<Int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < cols.front().size(); ++i) m[i][j] = cols[j][i];
    return m;
}

inline Coord to_coord(const Int& v) {
    if (v < std::numeric_limits<Coord>::min() || v > std::numeric_limits<Coord>::max())
        throw input_error("integer overflow converting exact value " + v.str());
    return static_cast<Coord>(v);
}

// Signed determinant via Bareiss fraction-free elimination.
inline Int det(Mat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline Int det_of_columns(const std::vector<CharVec>& cols) { return det(from_columns(cols)); }

// Row rank by fraction-free elimination; on request also returns the
// independent original rows in echelon position.
inline std::size_t row_reduce(Mat& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Int a = m[r][c], b = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = a * m[i][j] - b * m[r][j];
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_of(const std::vector<CharVec>& vectors) {
    Mat m = from_rows(vectors);
    return row_reduce(m);
}

// Primitive generator of the one-dimensional kernel of the span of the given
// vectors in Z^n, computed by cofactor expansion on an independent row basis.
// Returns nothing when the span does not have rank n-1. With canonical_sign
// the first nonzero entry is made positive.
inline std::optional<CharVec> kernel_primitive(const std::vector<CharVec>& vectors, std::size_t n,
                                               bool canonical_sign) {
    Mat reduced = from_rows(vectors);
    const std::size_t r = row_reduce(reduced);
    if (r != n - 1) return std::nullopt;
    reduced.resize(r);

    std::vector<Int> u(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
        Mat minor(r, std::vector<Int>(n - 1));
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[i][cc++] = reduced[i][c];
        }
        u[j] = (j % 2 == 0 ? 1 : -1) * det(std::move(minor));
        if (u[j] != 0) nonzero = true;
    }
    if (!nonzero) return std::nullopt;

    Int g = 0;
    for (const Int& c : u) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    CharVec out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = to_coord(u[j] / g);
    if (canonical_sign) {
        for (Coord c : out) {
            if (c > 0) break;
            if (c < 0) {
                out = negate(out);
                break;
            }
        }
    }
    return out;
}

// Exact rational solution x of the square system <x, row_i> = rhs_i by
// Cramer's rule. Requires the rows to be independent.
inline std::vector<Rat> solve_rows(const std::vector<CharVec>& rows, const std::vector<Int>& rhs) {
    const std::size_t n = rows.size();
    const Mat a = from_rows(rows);
    const Int d = det(a);
    if (d == 0) throw input_error("solve_rows: singular matrix");
    std::vector<Rat> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        Mat m = a;
        for (std::size_t i = 0; i < n; ++i) m[i][j] = rhs[i];
        x[j] = make_rat(det(std::move(m)), d);
    }
    return x;
}

}  // namespace linalg
}  // namespace torik
