#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "omnileib/algebra.hpp"
#include "omnileib/cochain.hpp"
#include "omnileib/matrix.hpp"
#include "omnileib/rational.hpp"

namespace omnileib {

/// Representation (V, l, r) of a Leibniz algebra: left and right action
/// matrices per basis element, subject to the three compatibility axioms
///   (1) l_{[x,y]} = [l_x, l_y]
///   (2) r_{[x,y]} = [l_x, r_y]
///   (3) r_y l_x = -r_y r_x
struct Representation {
    LeibnizAlgebra algebra;
    std::size_t dim_v = 0;
    std::vector<Matrix> l;  // algebra.dim matrices, dim_v x dim_v; l[i] acts for e_i
    std::vector<Matrix> r;

    friend bool operator==(const Representation&, const Representation&) = default;
};

/// On failure: the first violated axiom (1..3) at the first basis pair (i,j)
/// in lexicographic order, 1-based.
struct RepVerdict {
    bool ok = true;
    int axiom = 0;
    std::size_t i = 0;
    std::size_t j = 0;

    explicit operator bool() const { return ok; }

    std::string describe() const {
        if (ok) return "representation axioms hold";
        return "axiom " + std::to_string(axiom) + " fails at basis pair (" + std::to_string(i) +
               "," + std::to_string(j) + ")";
    }
};

namespace detail {

inline void require_rep_shape(const Representation& rep) {
    const std::size_t n = rep.algebra.dim;
    if (rep.l.size() != n || rep.r.size() != n)
        throw input_error("representation: need one l and one r matrix per basis element");
    for (const auto& m : rep.l)
        if (m.rows != rep.dim_v || m.cols != rep.dim_v)
            throw input_error("representation: l matrix shape mismatch");
    for (const auto& m : rep.r)
        if (m.rows != rep.dim_v || m.cols != rep.dim_v)
            throw input_error("representation: r matrix shape mismatch");
}

/// sum_k c(i,j,k) ms[k] — the action matrix attached to [e_i, e_j].
inline Matrix action_of_bracket(const LeibnizAlgebra& g, const std::vector<Matrix>& ms,
                                std::size_t i, std::size_t j, std::size_t d) {
    Matrix out(d, d);
    for (std::size_t k = 0; k < g.dim; ++k) {
        const Rat& c = g.cst(i, j, k);
        if (c != 0) out = out + c * ms[k];
    }
    return out;
}

}  // namespace detail

inline RepVerdict rep_check(const Representation& rep) {
    detail::require_rep_shape(rep);
    const std::size_t n = rep.algebra.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (detail::action_of_bracket(rep.algebra, rep.l, i, j, rep.dim_v) !=
                commutator(rep.l[i], rep.l[j]))
                return {false, 1, i + 1, j + 1};
            if (detail::action_of_bracket(rep.algebra, rep.r, i, j, rep.dim_v) !=
                commutator(rep.l[i], rep.r[j]))
                return {false, 2, i + 1, j + 1};
            if (rep.r[j] * rep.l[i] != Rat(-1) * (rep.r[j] * rep.r[i]))
                return {false, 3, i + 1, j + 1};
        }
    return {};
}

/// (V, 0, 0) on a d-dimensional module.
inline Representation trivial_rep(const LeibnizAlgebra& g, std::size_t d = 1) {
    Representation rep;
    rep.algebra = g;
    rep.dim_v = d;
    rep.l.assign(g.dim, Matrix(d, d));
    rep.r.assign(g.dim, Matrix(d, d));
    return rep;
}

/// Adjoint representation (g, ad_L, ad_R): ad_L(x)y = [x,y], ad_R(x)y = [y,x].
inline Representation adjoint_rep(const LeibnizAlgebra& g) {
    Representation rep;
    rep.algebra = g;
    rep.dim_v = g.dim;
    rep.l.assign(g.dim, Matrix(g.dim, g.dim));
    rep.r.assign(g.dim, Matrix(g.dim, g.dim));
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j)
            for (std::size_t k = 0; k < g.dim; ++k) {
                rep.l[i].at(k, j) = g.cst(i, j, k);
                rep.r[i].at(k, j) = g.cst(j, i, k);
            }
    return rep;
}

/// Semidirect product g x V with [x+u, y+v] = [x,y] + l_x v + r_y u on the
/// ordered basis (e_1..e_n, f_1..f_d); use_r = false drops the r term.
/// The full variant requires all representation axioms, the (l,0) variant
/// only axiom (1). Pass validate = false to build the table regardless.
inline LeibnizAlgebra semidirect_product(const Representation& rep, bool use_r,
                                         bool validate = true) {
    detail::require_rep_shape(rep);
    if (validate) {
        if (use_r) {
            const RepVerdict v = rep_check(rep);
            if (!v.ok) throw validation_error("semidirect_product: invalid representation: " + v.describe());
        } else {
            const std::size_t n = rep.algebra.dim;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (detail::action_of_bracket(rep.algebra, rep.l, i, j, rep.dim_v) !=
                        commutator(rep.l[i], rep.l[j]))
                        throw validation_error(
                            "semidirect_product: l is not a left action, axiom 1 fails at (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    const std::size_t n = rep.algebra.dim;
    const std::size_t d = rep.dim_v;
    LeibnizAlgebra h(n + d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) h.cst(i, j, k) = rep.algebra.cst(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t a = 0; a < d; ++a) h.cst(i, n + b, n + a) = rep.l[i].at(a, b);
    if (use_r)
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t b = 0; b < d; ++b) h.cst(n + a, j, n + b) = rep.r[j].at(b, a);
    return h;
}

/// The right action packaged as a 2-cochain on h = g x_{(l,0)} V valued in h:
/// rbar(x+u, y+v) = r_y u. Nonzero only on (V-basis, g-basis) argument pairs.
inline Cochain rbar_cochain(const Representation& rep) {
    detail::require_rep_shape(rep);
    const std::size_t n = rep.algebra.dim;
    const std::size_t d = rep.dim_v;
    const std::size_t h = n + d;
    Cochain c = zero_cochain(2, h, h);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t flat = (n + a) * h + j;
            for (std::size_t b = 0; b < d; ++b) c.coeffs[flat * h + (n + b)] = rep.r[j].at(b, a);
        }
    return c;
}

/// Action matrix of A |-> [lx, A] on gl(V) in the row-major matrix-unit
/// basis; the (a,b) unit maps to index a*d + b.
inline Matrix conjugation_action(const Matrix& lx) {
    const std::size_t d = lx.rows;
    Matrix out(d * d, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const std::size_t colidx = a * d + b;
            // [lx, E_ab] = sum_c lx(c,a) E_cb - sum_c lx(b,c) E_ac
            for (std::size_t c = 0; c < d; ++c) {
                if (lx.at(c, a) != 0) out.at(c * d + b, colidx) += lx.at(c, a);
                if (lx.at(b, c) != 0) out.at(a * d + c, colidx) -= lx.at(b, c);
            }
        }
    return out;
}

/// The representation on V* (x) V = gl(V) induced by a left action l, with
/// zero right action. Under the identification (xi (x) u)(v) = <xi,v> u the
/// left action is A |-> [l_x, A]. Requires axiom (1) for (V, l, 0).
inline Representation dual_tensor_rep(const Representation& rep) {
    detail::require_rep_shape(rep);
    const std::size_t n = rep.algebra.dim;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (detail::action_of_bracket(rep.algebra, rep.l, i, j, rep.dim_v) !=
                commutator(rep.l[i], rep.l[j]))
                throw validation_error("dual_tensor_rep: (V, l, 0) is not a representation at pair (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    Representation out;
    out.algebra = rep.algebra;
    out.dim_v = rep.dim_v * rep.dim_v;
    out.r.assign(n, Matrix(out.dim_v, out.dim_v));
    for (std::size_t i = 0; i < n; ++i) out.l.push_back(conjugation_action(rep.l[i]));
    return out;
}

}  // namespace omnileib
