#pragma once

// Exact dense linear algebra over any exact scalar (Rational or
// FieldElement): RREF, rank, solving, inversion. Sizes here are tiny
// (bounded by the group rank or 2^rank), so plain Gaussian elimination
// with exact division is the right tool.

#include "riffle/number_field.hpp"

#include <optional>
#include <vector>

namespace riffle {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K>
Matrix<K> mat_identity(int n) {
    Matrix<K> m(n, std::vector<K>(n, K(0)));
    for (int i = 0; i < n; ++i) m[i][i] = K(1);
    return m;
}

template <class K>
Matrix<K> mat_mul(const Matrix<K>& a, const Matrix<K>& b) {
    int n = a.size(), p = b.size(), q = p ? b[0].size() : 0;
    Matrix<K> r(n, std::vector<K>(q, K(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < p; ++k) {
            if (k_is_zero(a[i][k])) continue;
            for (int j = 0; j < q; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

// In-place row reduction to reduced row echelon form; returns rank.
// pivots (if non-null) receives the pivot column of each nonzero row.
template <class K>
int rref(Matrix<K>& m, std::vector<int>* pivots = nullptr) {
    int rows = m.size();
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    if (pivots) pivots->clear();
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!k_is_zero(m[i][c])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[r]);
        K inv = K(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || k_is_zero(m[i][c])) continue;
            K f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    m.resize(r == 0 ? 0 : r);  // drop zero rows
    if (r == 0) m.clear();
    return r;
}

template <class K>
int mat_rank(Matrix<K> m) {
    return rref(m);
}

template <class K>
std::optional<Matrix<K>> mat_inverse(const Matrix<K>& a) {
    int n = a.size();
    Matrix<K> aug(n, std::vector<K>(2 * n, K(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = K(1);
    }
    std::vector<int> piv;
    int r = rref(aug, &piv);
    if (r < n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (piv[i] != i) return std::nullopt;
    Matrix<K> inv(n, std::vector<K>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

// One solution of A x = b, if consistent.
template <class K>
std::optional<std::vector<K>> mat_solve(const Matrix<K>& a, const std::vector<K>& b) {
    int rows = a.size();
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    Matrix<K> aug(rows, std::vector<K>(cols + 1, K(0)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> piv;
    int r = rref(aug, &piv);
    for (int i = 0; i < r; ++i)
        if (piv[i] == cols) return std::nullopt;  // inconsistent
    std::vector<K> x(cols, K(0));
    for (int i = 0; i < r; ++i) x[piv[i]] = aug[i][cols];
    return x;
}

// Basis of the kernel of A.
template <class K>
std::vector<std::vector<K>> mat_kernel(Matrix<K> a, int cols) {
    std::vector<int> piv;
    int r = rref(a, &piv);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<K>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        std::vector<K> v(cols, K(0));
        v[c] = K(1);
        for (int i = 0; i < r; ++i) v[piv[i]] = -a[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace riffle
