#pragma once

// Shared helpers for the test suites: a seeded deterministic generator and
// independent oracles (brute-force Leibniz defect, fraction-free rank,
// Chevalley-Eilenberg coboundary) that deliberately avoid the code paths
// they are used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "omnileib/omnileib.hpp"

namespace testsupport {

using namespace omnileib;

struct TestRng {
    std::mt19937_64 eng;
    explicit TestRng(std::uint64_t seed) : eng(seed) {}

    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(eng() % n); }

    int small_int(int lo, int hi) { return lo + static_cast<int>(pick(hi - lo + 1)); }

    /// Roughly half zeros, otherwise small integers.
    Rat sparse_value() {
        const std::size_t r = pick(8);
        if (r < 4) return Rat(0);
        const int vals[4] = {-2, -1, 1, 2};
        return Rat(vals[r - 4]);
    }

    /// Small rationals with occasional denominators 2 or 3.
    Rat rational_value() {
        const int num = small_int(-3, 3);
        const int den = 1 + static_cast<int>(pick(3));
        return Rat(num, den);
    }
};

inline Vec random_vec(TestRng& rng, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = rng.rational_value();
    return v;
}

inline Matrix random_matrix(TestRng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (auto& x : m.a) x = rng.sparse_value();
    return m;
}

inline Cochain random_cochain(TestRng& rng, std::size_t degree, std::size_t n, std::size_t m) {
    Cochain c = zero_cochain(degree, n, m);
    for (auto& x : c.coeffs) x = rng.sparse_value();
    return c;
}

inline LeibnizAlgebra random_table(TestRng& rng, std::size_t n) {
    LeibnizAlgebra g(n);
    for (auto& x : g.c) x = rng.sparse_value();
    return g;
}

/// Leibniz defect of a basis triple computed through bracket_eval on
/// coordinate vectors, independent of the structure-constant contraction
/// inside is_leibniz.
inline Vec brute_defect(const LeibnizAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
    const Vec ei = unit_vec(g.dim, i);
    const Vec ej = unit_vec(g.dim, j);
    const Vec ek = unit_vec(g.dim, k);
    Vec defect = bracket_eval(g, ei, bracket_eval(g, ej, ek));
    defect = vec_sub(std::move(defect), bracket_eval(g, bracket_eval(g, ei, ej), ek));
    defect = vec_sub(std::move(defect), bracket_eval(g, ej, bracket_eval(g, ei, ek)));
    return defect;
}

inline bool brute_is_leibniz(const LeibnizAlgebra& g) {
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j)
            for (std::size_t k = 0; k < g.dim; ++k)
                if (!is_zero(brute_defect(g, i, j, k))) return false;
    return true;
}

/// Rank by fraction-free elimination with bottom-up pivot search. A second,
/// structurally different route than rref_rank: rows are scaled to integers
/// first, elimination is cross-multiplied and divided by the previous pivot.
inline std::size_t rank_oracle(Matrix m) {
    for (std::size_t i = 0; i < m.rows; ++i) {
        BigInt lcm = 1;
        for (std::size_t j = 0; j < m.cols; ++j) {
            const BigInt d = denominator(m.at(i, j));
            lcm = lcm / gcd(lcm, d) * d;
        }
        if (lcm != 1)
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) *= Rat(lcm);
    }
    Rat prev_pivot(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t pr = m.rows;
        for (std::size_t i = m.rows; i-- > row;)
            if (m.at(i, col) != 0) {
                pr = i;
                break;
            }
        if (pr == m.rows) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        const Rat pivot = m.at(row, col);
        for (std::size_t i = row + 1; i < m.rows; ++i) {
            const Rat factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = (pivot * m.at(i, j) - factor * m.at(row, j)) / prev_pivot;
        }
        prev_pivot = pivot;
        ++row;
    }
    return row;
}

/// Chevalley-Eilenberg coboundary with trivial coefficients, for comparing
/// against the Leibniz coboundary on skew-symmetric cochains:
/// (d xi)(x_0..x_k) = sum_{i<j} (-1)^{i+j} xi([x_i,x_j], ..no x_i, x_j..).
inline Cochain ce_coboundary_trivial(const LeibnizAlgebra& g, const Cochain& xi) {
    const std::size_t n = g.dim;
    const std::size_t k = xi.degree;
    Cochain out = zero_cochain(k + 1, n, 1);
    const std::size_t tuples = tuple_count(n, k + 1);
    std::size_t X[16];
    std::size_t arg[16];
    for (std::size_t xflat = 0; xflat < tuples; ++xflat) {
        decode_tuple(xflat, k + 1, n, X);
        Rat acc(0);
        for (std::size_t i = 0; i < k + 1; ++i)
            for (std::size_t j = i + 1; j < k + 1; ++j) {
                const int sign = ((i + j) % 2 == 0) ? 1 : -1;
                std::size_t pos = 1;
                for (std::size_t t = 0; t < k + 1; ++t) {
                    if (t == i || t == j) continue;
                    arg[pos++] = X[t];
                }
                for (std::size_t s = 0; s < n; ++s) {
                    const Rat& c = g.cst(X[i], X[j], s);
                    if (c == 0) continue;
                    arg[0] = s;
                    const Rat& v = xi.coeffs[encode_tuple(arg, k, n)];
                    if (v != 0) acc += Rat(sign) * c * v;
                }
            }
        out.coeffs[xflat] = acc;
    }
    return out;
}

/// The dual-tensor action computed from the tensor-product formula
/// (l* (x) 1 + 1 (x) l) rather than by commutators; used to cross-check
/// conjugation_action.
inline Matrix tensor_route_action(const Matrix& lx) {
    const std::size_t d = lx.rows;
    Matrix out(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const std::size_t colidx = a * d + b;
            // basis element xi_b (x) e_a: first factor contributes
            // -sum_c lx(b,c) (xi_c (x) e_a), second +sum_c lx(c,a) (xi_b (x) e_c)
            for (std::size_t c = 0; c < d; ++c) {
                if (lx.at(b, c) != 0) out.at(a * d + c, colidx) -= lx.at(b, c);
                if (lx.at(c, a) != 0) out.at(c * d + b, colidx) += lx.at(c, a);
            }
        }
    return out;
}

}  // namespace testsupport
