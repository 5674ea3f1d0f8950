#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "omnileib/matrix.hpp"
#include "omnileib/rational.hpp"

namespace omnileib {

/// Finite-dimensional left Leibniz algebra given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k with 0-based indices into a fixed basis.
///
/// The defining identity is [x,[y,z]] = [[x,y],z] + [y,[x,z]]; a table is
/// only a Leibniz algebra when is_leibniz reports true.
struct LeibnizAlgebra {
    std::size_t dim = 0;
    Vec c;  // dim^3 structure constants

    LeibnizAlgebra() = default;
    explicit LeibnizAlgebra(std::size_t n) : dim(n), c(n * n * n) {}

    Rat& cst(std::size_t i, std::size_t j, std::size_t k) { return c[(i * dim + j) * dim + k]; }
    const Rat& cst(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }

    friend bool operator==(const LeibnizAlgebra&, const LeibnizAlgebra&) = default;
};

/// [x, y] as a coordinate vector; bilinear in both slots.
inline Vec bracket_eval(const LeibnizAlgebra& g, const Vec& x, const Vec& y) {
    if (x.size() != g.dim || y.size() != g.dim)
        throw input_error("bracket_eval: vector length does not match algebra dimension");
    Vec out(g.dim);
    for (std::size_t i = 0; i < g.dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < g.dim; ++j) {
            if (y[j] == 0) continue;
            const Rat xy = x[i] * y[j];
            for (std::size_t k = 0; k < g.dim; ++k) {
                const Rat& cijk = g.cst(i, j, k);
                if (cijk != 0) out[k] += xy * cijk;
            }
        }
    }
    return out;
}

/// Outcome of the Leibniz identity check. On failure, witness holds the first
/// violating basis triple in lexicographic order (1-based) and defect its
/// nonzero defect vector.
struct LeibnizVerdict {
    bool ok = true;
    std::array<std::size_t, 3> witness{0, 0, 0};
    Vec defect;

    explicit operator bool() const { return ok; }
};

/// Checks [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]] = 0 over all
/// basis triples by contracting the structure constants.
inline LeibnizVerdict is_leibniz(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec defect(n);
                for (std::size_t s = 0; s < n; ++s) {
                    for (std::size_t m = 0; m < n; ++m) {
                        if (g.cst(j, k, s) != 0) defect[m] += g.cst(j, k, s) * g.cst(i, s, m);
                        if (g.cst(i, j, s) != 0) defect[m] -= g.cst(i, j, s) * g.cst(s, k, m);
                        if (g.cst(i, k, s) != 0) defect[m] -= g.cst(i, k, s) * g.cst(j, s, m);
                    }
                }
                if (!is_zero(defect)) return {false, {i + 1, j + 1, k + 1}, std::move(defect)};
            }
    return {};
}

/// Deterministic basis of the derived subalgebra [g,g]: the nonzero rows of
/// the RREF of all basis brackets, stacked in lexicographic (i,j) order.
inline std::vector<Vec> derived_subalgebra(const LeibnizAlgebra& g) {
    const std::size_t n = g.dim;
    Matrix rows(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) rows.at(i * n + j, k) = g.cst(i, j, k);
    const Rref r = rref_rank(rows);
    std::vector<Vec> basis;
    for (std::size_t t = 0; t < r.rank; ++t) {
        Vec v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = r.rref.at(t, k);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace omnileib
