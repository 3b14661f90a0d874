#pragma once

// Exact linear algebra: fraction-free (Bareiss) elimination for ranks and
// determinants, and affine hull dimension of point sets.

#include <sympoly/rational.hpp>

#include <algorithm>
#include <vector>

namespace sympoly {

// Clears denominators row by row; scaling rows does not change the rank.
inline std::vector<std::vector<Int>> to_integer_rows(const RatMat& m) {
    std::vector<std::vector<Int>> rows(m.rows, std::vector<Int>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols; ++j) l = boost::multiprecision::lcm(l, den(m.at(i, j)));
        for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = num(m.at(i, j)) * (l / den(m.at(i, j)));
    }
    return rows;
}

// Bareiss fraction-free elimination; returns the rank. Destroys `a`.
inline int bareiss_rank(std::vector<std::vector<Int>>& a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

inline int rank(const RatMat& m) {
    auto rows = to_integer_rows(m);
    return bareiss_rank(rows);
}

inline int rank(const std::vector<RatVec>& rows) {
    if (rows.empty()) return 0;
    RatMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return rank(m);
}

// Exact determinant of a square integer matrix (Bareiss). Destroys `a`.
inline Int bareiss_det(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                a[i][j] = (a[c][c] * a[i][j] - a[i][c] * a[c][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Dimension of the affine hull of a non-empty point set: rank of {p - p0}.
inline int affine_hull_dim(const std::vector<RatVec>& points) {
    if (points.empty()) throw std::invalid_argument("affine_hull_dim: empty point set");
    if (points.size() == 1) return 0;
    RatMat d(points.size() - 1, points[0].size());
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < points[0].size(); ++j)
            d.at(i - 1, j) = points[i][j] - points[0][j];
    return rank(d);
}

}  // namespace sympoly
