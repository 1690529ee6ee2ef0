#pragma once

#include <optional>
#include <vector>

#include "reebfam/scalar.hpp"

namespace reebfam {

template <class S>
using Vec = std::vector<S>;

template <class S>
using Mat = std::vector<std::vector<S>>;  // row major

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
    S s = scalar_traits<S>::zero();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class S>
Vec<S> operator+(const Vec<S>& a, const Vec<S>& b) {
    Vec<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class S>
Vec<S> operator-(const Vec<S>& a, const Vec<S>& b) {
    Vec<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class S>
Vec<S> operator*(const S& c, const Vec<S>& a) {
    Vec<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

template <class S>
Mat<S> identity_matrix(int n) {
    Mat<S> m(n, Vec<S>(n, scalar_traits<S>::zero()));
    for (int i = 0; i < n; ++i) m[i][i] = scalar_traits<S>::one();
    return m;
}

template <class S>
Vec<S> mat_vec(const Mat<S>& m, const Vec<S>& v) {
    Vec<S> r(m.size(), scalar_traits<S>::zero());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

template <class S>
Mat<S> mat_mul(const Mat<S>& a, const Mat<S>& b) {
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat<S> r(n, Vec<S>(m, scalar_traits<S>::zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

template <class S>
Mat<S> transpose(const Mat<S>& a) {
    std::size_t n = a.size(), m = a[0].size();
    Mat<S> r(m, Vec<S>(n, scalar_traits<S>::zero()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

namespace detail {
template <class S>
int pivot_row(const Mat<S>& a, int col, int from) {
    int best = -1;
    if constexpr (scalar_traits<S>::is_exact) {
        for (int r = from; r < (int)a.size(); ++r)
            if (a[r][col] != 0) return r;
        return best;
    } else {
        S mx = scalar_traits<S>::zero();
        for (int r = from; r < (int)a.size(); ++r) {
            S v = scalar_traits<S>::abs(a[r][col]);
            if (v > mx) { mx = v; best = r; }
        }
        return best;
    }
}
}  // namespace detail

/// Row-reduce [A | rhs...] in place; returns the pivot columns. Works for m x n A.
template <class S>
std::vector<int> row_reduce(Mat<S>& a) {
    int rows = (int)a.size();
    int cols = rows ? (int)a[0].size() : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = detail::pivot_row(a, c, r);
        if (p < 0) continue;
        if constexpr (!scalar_traits<S>::is_exact) {
            // treat tiny pivots as zero relative to the column scale
            S colscale = scalar_traits<S>::zero();
            for (int i = 0; i < rows; ++i) {
                S v = scalar_traits<S>::abs(a[i][c]);
                if (v > colscale) colscale = v;
            }
            if (scalar_traits<S>::abs(a[p][c]) <= 1e-12 * colscale) continue;
        }
        std::swap(a[p], a[r]);
        S inv = scalar_traits<S>::one() / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            S f = a[i][c];
            if (scalar_traits<S>::is_exact ? (f == scalar_traits<S>::zero()) : (f == 0.0)) continue;
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Solve the square system A x = b; nullopt if singular.
template <class S>
std::optional<Vec<S>> solve_square(Mat<S> a, Vec<S> b) {
    int n = (int)a.size();
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto piv = row_reduce(a);
    if ((int)piv.size() < n) return std::nullopt;
    Vec<S> x(n, scalar_traits<S>::zero());
    for (int i = 0; i < n; ++i) x[piv[i]] = a[i][n];
    return x;
}

template <class S>
std::optional<Mat<S>> invert(const Mat<S>& m) {
    int n = (int)m.size();
    Mat<S> a = m;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            a[i].push_back(i == j ? scalar_traits<S>::one() : scalar_traits<S>::zero());
    }
    auto piv = row_reduce(a);
    if ((int)piv.size() < n) return std::nullopt;
    Mat<S> inv(n, Vec<S>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[piv[i]][j] = a[i][n + j];
    return inv;
}

template <class S>
S determinant(Mat<S> a) {
    int n = (int)a.size();
    S det = scalar_traits<S>::one();
    for (int c = 0; c < n; ++c) {
        int p = detail::pivot_row(a, c, c);
        if (p < 0) return scalar_traits<S>::zero();
        if constexpr (!scalar_traits<S>::is_exact) {
            if (a[p][c] == 0.0) return 0.0;
        }
        if (p != c) { std::swap(a[p], a[c]); det = -det; }
        det *= a[c][c];
        S inv = scalar_traits<S>::one() / a[c][c];
        for (int i = c + 1; i < n; ++i) {
            S f = a[i][c] * inv;
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

template <class S>
int rank(Mat<S> a) {
    return (int)row_reduce(a).size();
}

/// Eigenvalues of a small symmetric double matrix (cyclic Jacobi).
std::vector<double> symmetric_eigenvalues(Mat<double> a);

/// Condition number estimate (ratio of extreme |eigenvalues|) for symmetric matrices.
double symmetric_condition(const Mat<double>& a);

}  // namespace reebfam
