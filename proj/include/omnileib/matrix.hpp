#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "omnileib/rational.hpp"

namespace omnileib {

/// Dense row-major matrix over Rat.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    Vec a;  // rows * cols entries, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool is_zero() const { return omnileib::is_zero(a); }

    Vec col(std::size_t j) const {
        Vec v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

inline Matrix operator+(Matrix m, const Matrix& b) {
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] += b.a[i];
    return m;
}

inline Matrix operator-(Matrix m, const Matrix& b) {
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] -= b.a[i];
    return m;
}

inline Matrix operator*(const Rat& s, Matrix m) {
    for (auto& x : m.a) x *= s;
    return m;
}

inline Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw input_error("matrix product shape mismatch");
    Matrix out(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& xik = x.at(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                const Rat& ykj = y.at(k, j);
                if (ykj != 0) out.at(i, j) += xik * ykj;
            }
        }
    return out;
}

inline Vec mat_vec(const Matrix& m, const Vec& v) {
    if (m.cols != v.size()) throw input_error("matrix-vector shape mismatch");
    Vec out(m.rows);
    for (std::size_t j = 0; j < m.cols; ++j) {
        if (v[j] == 0) continue;
        for (std::size_t i = 0; i < m.rows; ++i) {
            const Rat& mij = m.at(i, j);
            if (mij != 0) out[i] += mij * v[j];
        }
    }
    return out;
}

inline Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

inline Matrix transpose(const Matrix& m) {
    Matrix out(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

/// Reduced row echelon form with rank and pivot columns.
struct Rref {
    std::size_t rank = 0;
    Matrix rref;
    std::vector<std::size_t> pivot_cols;
};

/// Exact RREF over the rationals. The elimination order is fixed: columns are
/// scanned left to right, the pivot is the topmost unused row with a nonzero
/// entry, and every other row is cleared. No pivoting heuristics, so derived
/// bases and reports are reproducible.
inline Rref rref_rank(Matrix m) {
    Rref out;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols && next_row < m.rows; ++col) {
        std::size_t pivot = next_row;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != next_row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(next_row, j));
        const Rat inv = Rat(1) / m.at(next_row, col);
        for (std::size_t j = col; j < m.cols; ++j) m.at(next_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == next_row) continue;
            const Rat f = m.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(next_row, j);
        }
        out.pivot_cols.push_back(col);
        ++next_row;
    }
    out.rank = next_row;
    out.rref = std::move(m);
    return out;
}

/// Deterministic basis of {x : m x = 0}: one vector per free column in
/// increasing column order, with the free coordinate set to 1.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
    const Rref r = rref_rank(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (const std::size_t p : r.pivot_cols) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec x(m.cols);
        x[f] = 1;
        for (std::size_t t = 0; t < r.pivot_cols.size(); ++t) x[r.pivot_cols[t]] = -r.rref.at(t, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace omnileib
