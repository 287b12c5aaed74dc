#pragma once

// Dense linear algebra over a field object.  The field type K supplies
// value_type and the usual operations; everything here is exact.
//
//   struct K {
//     using value_type = ...;
//     value_type zero() const; value_type one() const;
//     value_type add(a, b) const; value_type sub(a, b) const;
//     value_type mul(a, b) const; value_type inv(a) const;
//     value_type neg(a) const;
//     bool is_zero(a) const;
//   };

#include <cstddef>
#include <optional>
#include <vector>

#include "rrca/errors.hpp"

namespace rrca::la {

template <class K>
struct Matrix {
    using T = typename K::value_type;
    size_t rows = 0, cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(size_t r, size_t c, T fill) : rows(r), cols(c), data(r * c, fill) {}

    T& at(size_t i, size_t j) { return data[i * cols + j]; }
    const T& at(size_t i, size_t j) const { return data[i * cols + j]; }
};

template <class K>
Matrix<K> identity(const K& k, size_t n) {
    Matrix<K> m(n, n, k.zero());
    for (size_t i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
}

template <class K>
Matrix<K> mat_mul(const K& k, const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols != b.rows) fail(errc::internal_error, "matrix shape mismatch");
    Matrix<K> out(a.rows, b.cols, k.zero());
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t l = 0; l < a.cols; ++l) {
            auto v = a.at(i, l);
            if (k.is_zero(v)) continue;
            for (size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = k.add(out.at(i, j), k.mul(v, b.at(l, j)));
        }
    return out;
}

template <class K>
std::vector<typename K::value_type> mat_vec(const K& k, const Matrix<K>& a,
                                            const std::vector<typename K::value_type>& v) {
    if (a.cols != v.size()) fail(errc::internal_error, "matrix/vector shape mismatch");
    std::vector<typename K::value_type> out(a.rows, k.zero());
    for (size_t i = 0; i < a.rows; ++i) {
        auto acc = k.zero();
        for (size_t j = 0; j < a.cols; ++j)
            if (!k.is_zero(a.at(i, j))) acc = k.add(acc, k.mul(a.at(i, j), v[j]));
        out[i] = acc;
    }
    return out;
}

// Row-reduce in place; returns pivot column per row rank.  Used by the
// helpers below.
template <class K>
std::vector<size_t> rref(const K& k, Matrix<K>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && k.is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        auto inv = k.inv(m.at(row, col));
        for (size_t j = col; j < m.cols; ++j) m.at(row, j) = k.mul(m.at(row, j), inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || k.is_zero(m.at(i, col))) continue;
            auto f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of the right kernel, one vector per column.
template <class K>
std::vector<std::vector<typename K::value_type>> kernel_basis(const K& k, Matrix<K> m) {
    auto pivots = rref(k, m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<typename K::value_type>> out;
    for (size_t freecol = 0; freecol < m.cols; ++freecol) {
        if (is_pivot[freecol]) continue;
        std::vector<typename K::value_type> v(m.cols, k.zero());
        v[freecol] = k.one();
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = k.neg(m.at(i, freecol));
        out.push_back(std::move(v));
    }
    return out;
}

// Solves A x = b; nullopt when inconsistent.
template <class K>
std::optional<std::vector<typename K::value_type>> solve(const K& k, Matrix<K> a,
                                                         std::vector<typename K::value_type> b) {
    if (a.rows != b.size()) fail(errc::internal_error, "solve shape mismatch");
    Matrix<K> aug(a.rows, a.cols + 1, k.zero());
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto pivots = rref(k, aug);
    std::vector<typename K::value_type> x(a.cols, k.zero());
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == a.cols) return std::nullopt; // pivot in the rhs column
        x[pivots[i]] = aug.at(i, a.cols);
    }
    return x;
}

// Characteristic polynomial via Hessenberg reduction; valid over any field.
// Returns monic coefficients, index = degree.
template <class K>
std::vector<typename K::value_type> char_poly(const K& k, Matrix<K> h) {
    using T = typename K::value_type;
    const size_t n = h.rows;
    if (h.cols != n) fail(errc::internal_error, "char_poly needs a square matrix");
    // reduce to upper Hessenberg by similarity
    for (size_t col = 0; col + 2 < n + 1 && col + 1 < n; ++col) {
        size_t piv = col + 1;
        while (piv < n && k.is_zero(h.at(piv, col))) ++piv;
        if (piv == n) continue;
        if (piv != col + 1) {
            for (size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(col + 1, j));
            for (size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, col + 1));
        }
        auto inv = k.inv(h.at(col + 1, col));
        for (size_t i = col + 2; i < n; ++i) {
            if (k.is_zero(h.at(i, col))) continue;
            auto f = k.mul(h.at(i, col), inv);
            for (size_t j = 0; j < n; ++j) h.at(i, j) = k.sub(h.at(i, j), k.mul(f, h.at(col + 1, j)));
            for (size_t j = 0; j < n; ++j) h.at(j, col + 1) = k.add(h.at(j, col + 1), k.mul(f, h.at(j, i)));
        }
    }
    // recurrence on leading principal minors of (xI - H)
    std::vector<std::vector<T>> p(n + 1);
    p[0] = {k.one()};
    for (size_t i = 1; i <= n; ++i) {
        // p_i = (x - h[i-1][i-1]) p_{i-1} - sum_{j<i-1} h[j][i-1] (prod of subdiagonal) p_j
        std::vector<T> cur(i + 1, k.zero());
        for (size_t d = 0; d < p[i - 1].size(); ++d) {
            cur[d + 1] = k.add(cur[d + 1], p[i - 1][d]);
            cur[d] = k.sub(cur[d], k.mul(h.at(i - 1, i - 1), p[i - 1][d]));
        }
        auto prod = k.one();
        for (size_t j = i - 1; j-- > 0;) {
            prod = k.mul(prod, h.at(j + 1, j));
            if (k.is_zero(prod)) break;
            auto coeff = k.mul(prod, h.at(j, i - 1));
            if (k.is_zero(coeff)) continue;
            for (size_t d = 0; d < p[j].size(); ++d)
                cur[d] = k.sub(cur[d], k.mul(coeff, p[j][d]));
        }
        p[i] = std::move(cur);
    }
    return p[n];
}

} // namespace rrca::la
