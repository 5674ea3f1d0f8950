#pragma once

#include <cstddef>
#include <string>

#include "omnileib/rational.hpp"

namespace omnileib {

/// Dense tables refuse to grow past this many coefficients.
inline constexpr std::size_t kMaxCochainCoeffs = 1'000'000;

/// Degree-k multilinear map (x_1,...,x_k) -> W stored as a dense coefficient
/// table. The flat layout is row-major lexicographic on the argument tuple
/// (i_1,...,i_k) with the codomain index varying fastest:
///   coeffs[tuple_flat * codomain_dim + a] = a-th coordinate of c(e_{i_1},...,e_{i_k}).
/// Degree 0 cochains are single codomain vectors (table length codomain_dim).
struct Cochain {
    std::size_t degree = 0;        // k >= 0, number of arguments
    std::size_t arity_dim = 0;     // dimension n of the argument space
    std::size_t codomain_dim = 0;  // dimension m of the value space
    Vec coeffs;                    // n^k * m entries

    bool is_zero() const { return omnileib::is_zero(coeffs); }

    friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// n^k with an overflow/size guard against m-scaled table blowup.
inline std::size_t tuple_count(std::size_t n, std::size_t k) {
    std::size_t p = 1;
    for (std::size_t t = 0; t < k; ++t) {
        if (n > 1 && p > kMaxCochainCoeffs / n)
            throw input_error("cochain table too large (more than 10^6 coefficients)");
        p *= n;
    }
    return p;
}

inline Cochain zero_cochain(std::size_t degree, std::size_t arity_dim, std::size_t codomain_dim) {
    const std::size_t tuples = tuple_count(arity_dim, degree);
    if (codomain_dim != 0 && tuples > kMaxCochainCoeffs / codomain_dim)
        throw input_error("cochain table too large (more than 10^6 coefficients)");
    Cochain c;
    c.degree = degree;
    c.arity_dim = arity_dim;
    c.codomain_dim = codomain_dim;
    c.coeffs.assign(tuples * codomain_dim, Rat(0));
    return c;
}

/// Basis cochain: value e_a at the given argument tuple, zero elsewhere.
inline Cochain delta_cochain(std::size_t degree, std::size_t arity_dim, std::size_t codomain_dim,
                             std::size_t tuple_flat, std::size_t a) {
    Cochain c = zero_cochain(degree, arity_dim, codomain_dim);
    c.coeffs[tuple_flat * codomain_dim + a] = 1;
    return c;
}

/// Decodes a flat tuple index into 0-based digits (most significant first).
inline void decode_tuple(std::size_t flat, std::size_t degree, std::size_t n, std::size_t* out) {
    for (std::size_t t = degree; t-- > 0;) {
        out[t] = flat % n;
        flat /= n;
    }
}

inline std::size_t encode_tuple(const std::size_t* tuple, std::size_t degree, std::size_t n) {
    std::size_t flat = 0;
    for (std::size_t t = 0; t < degree; ++t) flat = flat * n + tuple[t];
    return flat;
}

inline Cochain cochain_add(Cochain a, const Cochain& b) {
    if (a.degree != b.degree || a.arity_dim != b.arity_dim || a.codomain_dim != b.codomain_dim)
        throw input_error("cochain sum: shape mismatch");
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
}

inline Cochain cochain_sub(Cochain a, const Cochain& b) {
    if (a.degree != b.degree || a.arity_dim != b.arity_dim || a.codomain_dim != b.codomain_dim)
        throw input_error("cochain difference: shape mismatch");
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] -= b.coeffs[i];
    return a;
}

inline Cochain cochain_scale(const Rat& s, Cochain a) {
    for (auto& x : a.coeffs) x *= s;
    return a;
}

}  // namespace omnileib
