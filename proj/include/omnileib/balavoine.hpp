#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "omnileib/algebra.hpp"
#include "omnileib/cochain.hpp"
#include "omnileib/cohomology.hpp"
#include "omnileib/representation.hpp"

namespace omnileib {

/// An (i,j)-shuffle: a permutation of {1..i+j} increasing on the first i
/// positions and on the last j, stored 0-based (perm[pos] = source index),
/// together with its parity sign.
struct Shuffle {
    std::vector<std::size_t> perm;
    int sign = 1;
};

/// All (i,j)-shuffles in lexicographic order of the permutation sequence.
/// i = 0 or j = 0 yields just the identity.
inline std::vector<Shuffle> shuffles(std::size_t i, std::size_t j) {
    const std::size_t total = i + j;
    std::vector<Shuffle> out;
    // Choose which sources go to the first block; both blocks stay sorted,
    // so subsets in lexicographic order enumerate permutations in
    // lexicographic order.
    std::vector<std::size_t> pick(i);
    for (std::size_t t = 0; t < i; ++t) pick[t] = t;
    while (true) {
        Shuffle s;
        s.perm.resize(total);
        std::vector<bool> used(total, false);
        for (std::size_t t = 0; t < i; ++t) {
            s.perm[t] = pick[t];
            used[pick[t]] = true;
        }
        std::size_t pos = i;
        for (std::size_t v = 0; v < total; ++v)
            if (!used[v]) s.perm[pos++] = v;
        std::size_t inversions = 0;
        for (std::size_t x = 0; x < total; ++x)
            for (std::size_t y = x + 1; y < total; ++y)
                if (s.perm[x] > s.perm[y]) ++inversions;
        s.sign = (inversions % 2 == 0) ? 1 : -1;
        out.push_back(std::move(s));
        bool advanced = false;
        for (std::size_t t = i; t-- > 0;) {
            if (pick[t] < total - i + t) {
                ++pick[t];
                for (std::size_t u = t + 1; u < i; ++u) pick[u] = pick[u - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

namespace detail {

inline void require_g_valued(const Cochain& c, const char* who) {
    if (c.degree == 0) throw input_error(std::string(who) + ": degree-0 cochains are not allowed");
    if (c.codomain_dim != c.arity_dim)
        throw input_error(std::string(who) + ": cochain must be valued in its own argument space");
}

}  // namespace detail

/// Insertion product: plugs Q into slot k (1-based, 1 <= k <= p+1) of P,
/// summed over (k-1, q)-shuffles of the first k+q-1 arguments with sign
/// (-1)^sigma (-1)^{(k-1)q}; the argument at position k+q is fed to Q last
/// and the tail goes to P unshuffled. P in C^{p+1}, Q in C^{q+1}, result in
/// C^{p+q+1}.
inline Cochain circ_k(const Cochain& P, const Cochain& Q, std::size_t k) {
    detail::require_g_valued(P, "circ_k");
    detail::require_g_valued(Q, "circ_k");
    if (P.arity_dim != Q.arity_dim) throw input_error("circ_k: mismatched argument spaces");
    const std::size_t p = P.degree - 1;
    const std::size_t q = Q.degree - 1;
    if (k < 1 || k > p + 1) throw input_error("circ_k: slot out of range");
    const std::size_t n = P.arity_dim;
    const std::size_t out_degree = p + q + 1;
    Cochain out = zero_cochain(out_degree, n, n);
    const std::vector<Shuffle> sh = shuffles(k - 1, q);
    const int block_sign = ((k - 1) * q) % 2 == 0 ? 1 : -1;

    const std::size_t out_tuples = tuple_count(n, out_degree);
    std::size_t X[16];
    std::size_t qargs[16];
    std::size_t pargs[16];
    for (std::size_t xflat = 0; xflat < out_tuples; ++xflat) {
        decode_tuple(xflat, out_degree, n, X);
        Rat* dst = &out.coeffs[xflat * n];
        for (const Shuffle& s : sh) {
            for (std::size_t t = 0; t + 1 < k; ++t) pargs[t] = X[s.perm[t]];
            for (std::size_t t = 0; t < q; ++t) qargs[t] = X[s.perm[k - 1 + t]];
            qargs[q] = X[k + q - 1];
            const std::size_t qflat = encode_tuple(qargs, q + 1, n);
            const Rat* inner = &Q.coeffs[qflat * n];
            const int sign = s.sign * block_sign;
            for (std::size_t t = k + q; t < out_degree; ++t) pargs[t - q] = X[t];
            for (std::size_t mid = 0; mid < n; ++mid) {
                if (inner[mid] == 0) continue;
                pargs[k - 1] = mid;
                const std::size_t pflat = encode_tuple(pargs, p + 1, n);
                const Rat* pval = &P.coeffs[pflat * n];
                const Rat f = (sign > 0) ? inner[mid] : Rat(-inner[mid]);
                for (std::size_t b = 0; b < n; ++b)
                    if (pval[b] != 0) dst[b] += f * pval[b];
            }
        }
    }
    return out;
}

/// P obar Q = sum_{k=1}^{p+1} P circ_k Q.
inline Cochain bar_circ(const Cochain& P, const Cochain& Q) {
    detail::require_g_valued(P, "bar_circ");
    detail::require_g_valued(Q, "bar_circ");
    const std::size_t p = P.degree - 1;
    Cochain out = circ_k(P, Q, 1);
    for (std::size_t k = 2; k <= p + 1; ++k) out = cochain_add(std::move(out), circ_k(P, Q, k));
    return out;
}

/// Balavoine bracket [P,Q] = P obar Q - (-1)^{pq} Q obar P on g-valued
/// cochains of degree >= 1, where p = deg P - 1 and q = deg Q - 1.
inline Cochain bracket_b(const Cochain& P, const Cochain& Q) {
    detail::require_g_valued(P, "bracket_b");
    detail::require_g_valued(Q, "bracket_b");
    if (P.arity_dim != Q.arity_dim) throw input_error("bracket_b: mismatched argument spaces");
    const std::size_t p = P.degree - 1;
    const std::size_t q = Q.degree - 1;
    const Cochain pq = bar_circ(P, Q);
    const Cochain qp = bar_circ(Q, P);
    const bool flip = ((p * q) % 2 == 0);
    // [P,Q] = P obar Q - (-1)^{pq} Q obar P
    return flip ? cochain_sub(pq, qp) : cochain_add(pq, qp);
}

/// The bracket of an algebra as a 2-cochain valued in the algebra itself.
inline Cochain algebra_bracket_cochain(const LeibnizAlgebra& g) {
    Cochain c = zero_cochain(2, g.dim, g.dim);
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j)
            for (std::size_t k = 0; k < g.dim; ++k)
                c.coeffs[(i * g.dim + j) * g.dim + k] = g.cst(i, j, k);
    return c;
}

/// Result of the Maurer-Cartan check. On failure, witness is the first basis
/// triple (1-based, in the semidirect-product basis) where the residual
/// d(rbar) - 1/2 [rbar, rbar] is nonzero, and component its coordinate.
struct McVerdict {
    bool ok = true;
    std::array<std::size_t, 3> witness{0, 0, 0};
    std::size_t component = 0;

    explicit operator bool() const { return ok; }
};

/// Verifies that rbar solves the Maurer-Cartan equation
/// d(rbar) - 1/2 [rbar, rbar] = 0 on h = g x_{(l,0)} V with the adjoint
/// coefficients of h. validate = false skips the representation axioms so
/// deliberately broken inputs can be probed.
inline McVerdict mc_check(const Representation& rep, bool validate = true) {
    if (validate) {
        const RepVerdict v = rep_check(rep);
        if (!v.ok) throw validation_error("mc_check: invalid representation: " + v.describe());
    }
    const LeibnizAlgebra h = semidirect_product(rep, false, validate);
    const Cochain rbar = rbar_cochain(rep);
    const Cochain residual = cochain_sub(coboundary(adjoint_rep(h), rbar),
                                         cochain_scale(Rat(1, 2), bracket_b(rbar, rbar)));
    if (residual.is_zero()) return {};
    const std::size_t hd = h.dim;
    for (std::size_t idx = 0; idx < residual.coeffs.size(); ++idx)
        if (residual.coeffs[idx] != 0) {
            const std::size_t tuple = idx / hd;
            const std::size_t comp = idx % hd;
            std::size_t T[3];
            decode_tuple(tuple, 3, hd, T);
            return {false, {T[0] + 1, T[1] + 1, T[2] + 1}, comp + 1};
        }
    return {};
}

}  // namespace omnileib
