#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omnileib/cochain.hpp"
#include "omnileib/matrix.hpp"
#include "omnileib/representation.hpp"

namespace omnileib {

/// Coboundary of a degree-k cochain c with values in a representation (V,l,r):
///
///   (dc)(x_1..x_{k+1}) = sum_{i<=k} (-1)^{i+1} l_{x_i} c(..no x_i..)
///                      + (-1)^{k+1} r_{x_{k+1}} c(x_1..x_k)
///                      + sum_{i<j} (-1)^i c(..no x_i.., [x_i,x_j] at slot j-1, ..)
///
/// At k = 0 only the middle term survives: (dc)(x) = -r_x(c).
///
/// Implemented by scattering each nonzero input coefficient into every output
/// tuple it feeds; exact rational accumulation makes the result independent
/// of scatter order.
inline Cochain coboundary(const Representation& rep, const Cochain& c) {
    const std::size_t n = rep.algebra.dim;
    const std::size_t m = rep.dim_v;
    if (c.arity_dim != n) throw input_error("coboundary: cochain arity does not match algebra");
    if (c.codomain_dim != m)
        throw input_error("coboundary: cochain codomain does not match module dimension");
    detail::require_rep_shape(rep);

    const std::size_t k = c.degree;
    Cochain out = zero_cochain(k + 1, n, m);
    if (m == 0 || c.coeffs.empty()) return out;
    const std::size_t tuples = tuple_count(n, k);
    const int rsign = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1}

    std::size_t T[16];
    std::size_t Y[17];
    for (std::size_t tflat = 0; tflat < tuples; ++tflat) {
        const Rat* cv = &c.coeffs[tflat * m];
        bool all_zero = true;
        for (std::size_t a = 0; a < m; ++a)
            if (cv[a] != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) continue;
        decode_tuple(tflat, k, n, T);

        // Left-action terms: insert the acting element at slot pos.
        for (std::size_t pos = 0; pos < k; ++pos) {
            const int sign = (pos % 2 == 0) ? 1 : -1;  // (-1)^{i+1}, i = pos+1
            for (std::size_t t = 0; t < pos; ++t) Y[t] = T[t];
            for (std::size_t t = pos; t < k; ++t) Y[t + 1] = T[t];
            for (std::size_t v = 0; v < n; ++v) {
                Y[pos] = v;
                const std::size_t yflat = encode_tuple(Y, k + 1, n);
                const Matrix& L = rep.l[v];
                for (std::size_t a = 0; a < m; ++a) {
                    if (cv[a] == 0) continue;
                    const Rat q = (sign > 0) ? cv[a] : Rat(-cv[a]);
                    for (std::size_t b = 0; b < m; ++b) {
                        const Rat& lba = L.at(b, a);
                        if (lba != 0) out.coeffs[yflat * m + b] += q * lba;
                    }
                }
            }
        }

        // Right-action term: acting element appended as the last argument.
        for (std::size_t t = 0; t < k; ++t) Y[t] = T[t];
        for (std::size_t v = 0; v < n; ++v) {
            Y[k] = v;
            const std::size_t yflat = encode_tuple(Y, k + 1, n);
            const Matrix& R = rep.r[v];
            for (std::size_t a = 0; a < m; ++a) {
                if (cv[a] == 0) continue;
                const Rat q = (rsign > 0) ? cv[a] : Rat(-cv[a]);
                for (std::size_t b = 0; b < m; ++b) {
                    const Rat& rba = R.at(b, a);
                    if (rba != 0) out.coeffs[yflat * m + b] += q * rba;
                }
            }
        }

        // Bracket-substitution terms: slot bslot of T is consumed by the
        // bracket [u, w] placed at output positions (ii, jj).
        for (std::size_t ii = 0; ii < k; ++ii) {
            const int sign = (ii % 2 == 0) ? -1 : 1;  // (-1)^i, i = ii+1
            for (std::size_t jj = ii + 1; jj <= k; ++jj) {
                const std::size_t bslot = jj - 1;
                const std::size_t s = T[bslot];
                // Y = (T minus slot bslot) with u at ii and w at jj.
                std::size_t pos = 0;
                for (std::size_t t = 0; t < k; ++t) {
                    if (t == bslot) continue;
                    std::size_t y = pos;
                    if (y >= ii) ++y;
                    if (y >= jj) ++y;
                    Y[y] = T[t];
                    ++pos;
                }
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t w = 0; w < n; ++w) {
                        const Rat& cuws = rep.algebra.cst(u, w, s);
                        if (cuws == 0) continue;
                        Y[ii] = u;
                        Y[jj] = w;
                        const std::size_t yflat = encode_tuple(Y, k + 1, n);
                        const Rat f = (sign > 0) ? cuws : Rat(-cuws);
                        for (std::size_t a = 0; a < m; ++a)
                            if (cv[a] != 0) out.coeffs[yflat * m + a] += f * cv[a];
                    }
            }
        }
    }
    return out;
}

inline bool is_cocycle(const Representation& rep, const Cochain& c) {
    return coboundary(rep, c).is_zero();
}

/// Matrix of the coboundary on degree-k cochains in the flat bases:
/// shape (n^{k+1} m) x (n^k m), column = coboundary of the basis cochain.
inline Matrix coboundary_matrix(const Representation& rep, std::size_t k) {
    const std::size_t n = rep.algebra.dim;
    const std::size_t m = rep.dim_v;
    const std::size_t cols = tuple_count(n, k) * m;
    if (m != 0 && tuple_count(n, k + 1) > kMaxCochainCoeffs / m)
        throw input_error("coboundary matrix too large");
    const std::size_t rows = tuple_count(n, k + 1) * m;
    Matrix out(rows, cols);
    for (std::size_t col = 0; col < cols; ++col) {
        const Cochain image = coboundary(rep, delta_cochain(k, n, m, col / m, col % m));
        for (std::size_t row = 0; row < rows; ++row) out.at(row, col) = image.coeffs[row];
    }
    return out;
}

/// Cochain dimensions, coboundary ranks and cohomology dimensions for
/// degrees 0..max_degree.
struct CohomologyReport {
    std::vector<std::size_t> cochain_dims;  // dim C^k
    std::vector<std::size_t> ranks;         // rank of d_k
    std::vector<std::size_t> h_dims;        // dim H^k = dim ker d_k - rank d_{k-1}
};

inline constexpr std::size_t kMaxCohomologyDegree = 6;

inline CohomologyReport cohomology_dims(const Representation& rep, std::size_t max_degree,
                                        bool validate = true) {
    if (max_degree > kMaxCohomologyDegree)
        throw input_error("max degree capped at " + std::to_string(kMaxCohomologyDegree));
    if (validate) {
        const RepVerdict v = rep_check(rep);
        if (!v.ok) throw validation_error("cohomology_dims: invalid representation: " + v.describe());
    }
    CohomologyReport report;
    for (std::size_t k = 0; k <= max_degree; ++k) {
        const std::size_t dim_ck = tuple_count(rep.algebra.dim, k) * rep.dim_v;
        const std::size_t rank_k = rref_rank(coboundary_matrix(rep, k)).rank;
        report.cochain_dims.push_back(dim_ck);
        report.ranks.push_back(rank_k);
        const std::size_t kernel = dim_ck - rank_k;
        const std::size_t image_below = (k == 0) ? 0 : report.ranks[k - 1];
        // Can only trip when validation was skipped: a genuine representation
        // yields a complex, where im d_{k-1} is contained in ker d_k.
        if (kernel < image_below)
            throw validation_error(
                "cohomology_dims: not a cochain complex (rank of d_{k-1} exceeds dim ker d_k); "
                "the coefficients do not form a representation");
        report.h_dims.push_back(kernel - image_below);
    }
    return report;
}

}  // namespace omnileib
