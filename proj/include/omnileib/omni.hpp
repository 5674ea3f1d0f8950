#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "omnileib/algebra.hpp"
#include "omnileib/cochain.hpp"
#include "omnileib/cohomology.hpp"
#include "omnileib/matrix.hpp"
#include "omnileib/representation.hpp"

namespace omnileib {

/// Element A + u of gl(V) + V. Flat coordinates are (A row-major, then u),
/// length d^2 + d.
struct OmniElement {
    Matrix a;  // d x d
    Vec u;     // length d

    friend bool operator==(const OmniElement&, const OmniElement&) = default;
};

inline OmniElement zero_omni(std::size_t d) { return {Matrix(d, d), Vec(d)}; }

inline Vec omni_flatten(const OmniElement& x) {
    Vec out = x.a.a;
    out.insert(out.end(), x.u.begin(), x.u.end());
    return out;
}

inline OmniElement omni_unflatten(const Vec& flat, std::size_t d) {
    if (flat.size() != d * d + d) throw input_error("omni element: flat length mismatch");
    OmniElement x = zero_omni(d);
    for (std::size_t t = 0; t < d * d; ++t) x.a.a[t] = flat[t];
    for (std::size_t t = 0; t < d; ++t) x.u[t] = flat[d * d + t];
    return x;
}

/// The omni-Lie bracket [[A+u, B+v]] = [A,B] + Av. A left Leibniz bracket,
/// not skew-symmetric.
inline OmniElement omni_bracket(const OmniElement& x, const OmniElement& y) {
    if (x.u.size() != y.u.size()) throw input_error("omni_bracket: dimension mismatch");
    return {commutator(x.a, y.a), mat_vec(x.a, y.u)};
}

/// A linear map g -> gl(V) + V split into its components phi(e_i) and
/// theta(e_i). It is an omni-representation when it is a homomorphism of
/// Leibniz algebras, equivalently when
///   (1) phi([x,y]) = [phi(x), phi(y)]
///   (2) theta([x,y]) = phi(x) theta(y)
struct OmniRep {
    LeibnizAlgebra algebra;
    std::size_t dim_v = 0;
    std::vector<Matrix> phi;  // algebra.dim matrices d x d
    std::vector<Vec> theta;   // algebra.dim vectors of length d

    friend bool operator==(const OmniRep&, const OmniRep&) = default;
};

inline OmniElement omnirep_apply(const OmniRep& rho, std::size_t i) {
    return {rho.phi[i], rho.theta[i]};
}

struct OmniVerdict {
    bool ok = true;
    int equation = 0;  // 1 or 2
    std::size_t i = 0;
    std::size_t j = 0;

    explicit operator bool() const { return ok; }

    std::string describe() const {
        if (ok) return "omni-representation conditions hold";
        return "equation " + std::to_string(equation) + " fails at basis pair (" +
               std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

namespace detail {

inline void require_omnirep_shape(const OmniRep& rho) {
    const std::size_t n = rho.algebra.dim;
    if (rho.phi.size() != n || rho.theta.size() != n)
        throw input_error("omni-representation: need one phi matrix and one theta vector per basis element");
    for (const auto& m : rho.phi)
        if (m.rows != rho.dim_v || m.cols != rho.dim_v)
            throw input_error("omni-representation: phi matrix shape mismatch");
    for (const auto& v : rho.theta)
        if (v.size() != rho.dim_v) throw input_error("omni-representation: theta vector shape mismatch");
}

}  // namespace detail

/// Checks the two component equations on all basis pairs and cross-checks
/// them against the direct homomorphism condition
/// [[rho(e_i), rho(e_j)]] = rho([e_i,e_j]); the two routes must agree.
inline OmniVerdict omnirep_check(const OmniRep& rho) {
    detail::require_omnirep_shape(rho);
    const std::size_t n = rho.algebra.dim;
    const std::size_t d = rho.dim_v;
    OmniVerdict verdict;
    for (std::size_t i = 0; i < n && verdict.ok; ++i)
        for (std::size_t j = 0; j < n && verdict.ok; ++j) {
            Matrix phi_bracket(d, d);
            Vec theta_bracket(d);
            for (std::size_t k = 0; k < n; ++k) {
                const Rat& c = rho.algebra.cst(i, j, k);
                if (c == 0) continue;
                phi_bracket = phi_bracket + c * rho.phi[k];
                vec_axpy(theta_bracket, c, rho.theta[k]);
            }
            const bool eq1 = phi_bracket == commutator(rho.phi[i], rho.phi[j]);
            const bool eq2 = theta_bracket == mat_vec(rho.phi[i], rho.theta[j]);
            if (!eq1)
                verdict = {false, 1, i + 1, j + 1};
            else if (!eq2)
                verdict = {false, 2, i + 1, j + 1};
            const bool direct =
                omni_bracket(omnirep_apply(rho, i), omnirep_apply(rho, j)) ==
                OmniElement{phi_bracket, theta_bracket};
            if (direct != (eq1 && eq2))
                throw invariant_error("omnirep_check: componentwise and direct homomorphism "
                                      "checks disagree");
        }
    return verdict;
}

/// Adjoint omni-representation ad_L + id : g -> gl(g) + g.
inline OmniRep adjoint_omnirep(const LeibnizAlgebra& g) {
    const Representation ad = adjoint_rep(g);
    OmniRep rho;
    rho.algebra = g;
    rho.dim_v = g.dim;
    rho.phi = ad.l;
    for (std::size_t i = 0; i < g.dim; ++i) rho.theta.push_back(unit_vec(g.dim, i));
    return rho;
}

/// The omni-representation on V* (x) V induced by a representation (V,l,r):
/// phi acts by commutation with l and theta(e_i) is r_{e_i} flattened
/// row-major.
inline OmniRep from_usual_rep(const Representation& rep) {
    const RepVerdict v = rep_check(rep);
    if (!v.ok) throw validation_error("from_usual_rep: invalid representation: " + v.describe());
    const Representation dtr = dual_tensor_rep(rep);
    OmniRep rho;
    rho.algebra = rep.algebra;
    rho.dim_v = dtr.dim_v;
    rho.phi = dtr.l;
    for (std::size_t i = 0; i < rep.algebra.dim; ++i) rho.theta.push_back(rep.r[i].a);
    return rho;
}

/// Deterministic basis of {xi in g* : xi vanishes on [g,g]}; functionals are
/// coordinate rows in the dual basis.
inline std::vector<Vec> trivial_omnirep_functionals(const LeibnizAlgebra& g) {
    const std::vector<Vec> derived = derived_subalgebra(g);
    Matrix constraints(derived.size(), g.dim);
    for (std::size_t t = 0; t < derived.size(); ++t)
        for (std::size_t k = 0; k < g.dim; ++k) constraints.at(t, k) = derived[t][k];
    return kernel_basis(constraints);
}

/// Packages a functional vanishing on [g,g] as the omni-representation
/// (d = 1, phi = 0, theta = xi).
inline OmniRep trivial_omnirep(const LeibnizAlgebra& g, const Vec& xi) {
    if (xi.size() != g.dim) throw input_error("trivial_omnirep: functional length mismatch");
    OmniRep rho;
    rho.algebra = g;
    rho.dim_v = 1;
    rho.phi.assign(g.dim, Matrix(1, 1));
    for (std::size_t i = 0; i < g.dim; ++i) rho.theta.push_back(Vec{xi[i]});
    return rho;
}

/// The zero omni-representation on a d-dimensional space. For a perfect
/// algebra this is the only trivial omni-representation.
inline OmniRep zero_omnirep(const LeibnizAlgebra& g, std::size_t d = 1) {
    OmniRep rho;
    rho.algebra = g;
    rho.dim_v = d;
    rho.phi.assign(g.dim, Matrix(d, d));
    rho.theta.assign(g.dim, Vec(d));
    return rho;
}

/// Embedding-tensor condition for phi : V -> gl(V), given as phi(f_a) per
/// module basis vector: [phi(u), phi(v)] = phi(phi(u) v). Holding on basis
/// pairs is enough by bilinearity, and is equivalent to the graph
/// {phi(u) + u} being closed under the omni-Lie bracket.
inline bool graph_check(const std::vector<Matrix>& phi) {
    const std::size_t d = phi.size();
    for (const auto& m : phi)
        if (m.rows != d || m.cols != d) throw input_error("graph_check: phi matrix shape mismatch");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const Vec w = phi[a].col(b);  // phi(f_a) f_b
            Matrix rhs(d, d);
            for (std::size_t c = 0; c < d; ++c)
                if (w[c] != 0) rhs = rhs + w[c] * phi[c];
            if (commutator(phi[a], phi[b]) != rhs) return false;
        }
    return true;
}

/// The Leibniz algebra on V with [u,v] = phi(u) v; requires graph_check.
inline LeibnizAlgebra induced_bracket(const std::vector<Matrix>& phi) {
    if (!graph_check(phi))
        throw validation_error("induced_bracket: phi is not an embedding tensor (graph not closed)");
    const std::size_t d = phi.size();
    LeibnizAlgebra g(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t k = 0; k < d; ++k) g.cst(a, b, k) = phi[a].at(k, b);
    return g;
}

/// For an omni-representation whose image lies in the graph of an embedding
/// tensor phi (rho = phi o theta + theta, phi supplied explicitly), the
/// induced actions on V:  l_x u = phi(theta(x)) u,  r_x u = phi(u) theta(x).
inline Representation induced_lr(const OmniRep& rho, const std::vector<Matrix>& phi,
                                 bool validate = true) {
    detail::require_omnirep_shape(rho);
    const std::size_t n = rho.algebra.dim;
    const std::size_t d = rho.dim_v;
    if (phi.size() != d) throw input_error("induced_lr: phi must have one matrix per module basis vector");
    if (validate) {
        const OmniVerdict v = omnirep_check(rho);
        if (!v.ok) throw validation_error("induced_lr: not an omni-representation: " + v.describe());
        if (!graph_check(phi))
            throw validation_error("induced_lr: phi is not an embedding tensor (graph not closed)");
    }
    Representation out;
    out.algebra = rho.algebra;
    out.dim_v = d;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix phi_theta(d, d);
        for (std::size_t a = 0; a < d; ++a)
            if (rho.theta[i][a] != 0) phi_theta = phi_theta + rho.theta[i][a] * phi[a];
        if (phi_theta != rho.phi[i])
            throw validation_error("induced_lr: image not contained in the given graph: rho(e_" +
                              std::to_string(i + 1) + ") has matrix part different from "
                              "phi(theta(e_" + std::to_string(i + 1) + "))");
        out.l.push_back(std::move(phi_theta));
        Matrix r(d, d);
        for (std::size_t a = 0; a < d; ++a) {
            const Vec col = mat_vec(phi[a], rho.theta[i]);
            for (std::size_t b = 0; b < d; ++b) r.at(b, a) = col[b];
        }
        out.r.push_back(std::move(r));
    }
    return out;
}

/// Deterministically chosen basis of img(rho) inside gl(V) + V, with exact
/// coordinate solving. Basis vectors are the nonzero RREF rows of the
/// stacked flat coordinates of rho(e_1)..rho(e_n), so each pivot coordinate
/// reads off one basis coefficient directly.
struct ImageSubspace {
    std::size_t dim_v = 0;
    std::vector<OmniElement> basis;
    Matrix rref_rows;  // basis.size() x (d^2 + d)
    std::vector<std::size_t> pivot_cols;

    std::size_t dim() const { return basis.size(); }

    /// Coordinates of an element of the span in the basis; invariant_error
    /// if the element is outside the span.
    Vec coords(const OmniElement& x) const {
        const Vec flat = omni_flatten(x);
        if (flat.size() != rref_rows.cols) throw input_error("image coords: dimension mismatch");
        Vec out(basis.size());
        for (std::size_t t = 0; t < basis.size(); ++t) out[t] = flat[pivot_cols[t]];
        Vec recon(flat.size());
        for (std::size_t t = 0; t < basis.size(); ++t)
            if (out[t] != 0)
                for (std::size_t c = 0; c < flat.size(); ++c) recon[c] += out[t] * rref_rows.at(t, c);
        if (recon != flat)
            throw invariant_error("image coords: element is not in the image subspace");
        return out;
    }

    OmniElement reconstruct(const Vec& coords_vec) const {
        if (coords_vec.size() != basis.size()) throw input_error("image reconstruct: length mismatch");
        OmniElement out = zero_omni(dim_v);
        for (std::size_t t = 0; t < basis.size(); ++t) {
            if (coords_vec[t] == 0) continue;
            out.a = out.a + coords_vec[t] * basis[t].a;
            vec_axpy(out.u, coords_vec[t], basis[t].u);
        }
        return out;
    }
};

/// Basis of img(rho) with closure verified: the bracket of any two basis
/// vectors must solve in the basis (it does for genuine homomorphisms).
inline ImageSubspace image_subspace(const OmniRep& rho, bool validate = true) {
    detail::require_omnirep_shape(rho);
    if (validate) {
        const OmniVerdict v = omnirep_check(rho);
        if (!v.ok) throw validation_error("image_subspace: not an omni-representation: " + v.describe());
    }
    const std::size_t n = rho.algebra.dim;
    const std::size_t d = rho.dim_v;
    Matrix rows(n, d * d + d);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec flat = omni_flatten(omnirep_apply(rho, i));
        for (std::size_t c = 0; c < flat.size(); ++c) rows.at(i, c) = flat[c];
    }
    const Rref r = rref_rank(rows);
    ImageSubspace img;
    img.dim_v = d;
    img.pivot_cols = r.pivot_cols;
    img.rref_rows = Matrix(r.rank, d * d + d);
    for (std::size_t t = 0; t < r.rank; ++t) {
        Vec flat(d * d + d);
        for (std::size_t c = 0; c < flat.size(); ++c) {
            img.rref_rows.at(t, c) = r.rref.at(t, c);
            flat[c] = r.rref.at(t, c);
        }
        img.basis.push_back(omni_unflatten(flat, d));
    }
    for (std::size_t i = 0; i < img.basis.size(); ++i)
        for (std::size_t j = 0; j < img.basis.size(); ++j)
            img.coords(omni_bracket(img.basis[i], img.basis[j]));  // throws if closure fails
    return img;
}

/// The omni-cochain complex of rho: cochains are stored in image-basis
/// coordinates, and the coboundary is the usual one for the induced actions
/// l_x u = [[rho(x), u]] and r_x u = [[u, rho(x)]] on img(rho).
struct OmniComplex {
    OmniRep rho;
    ImageSubspace image;
    Representation induced;
};

inline OmniComplex omni_complex(const OmniRep& rho, bool validate = true) {
    OmniComplex ctx;
    ctx.rho = rho;
    ctx.image = image_subspace(rho, validate);
    const std::size_t n = rho.algebra.dim;
    const std::size_t p = ctx.image.dim();
    ctx.induced.algebra = rho.algebra;
    ctx.induced.dim_v = p;
    ctx.induced.l.assign(n, Matrix(p, p));
    ctx.induced.r.assign(n, Matrix(p, p));
    for (std::size_t i = 0; i < n; ++i) {
        const OmniElement rx = omnirep_apply(ctx.rho, i);
        for (std::size_t j = 0; j < p; ++j) {
            const Vec lcol = ctx.image.coords(omni_bracket(rx, ctx.image.basis[j]));
            const Vec rcol = ctx.image.coords(omni_bracket(ctx.image.basis[j], rx));
            for (std::size_t b = 0; b < p; ++b) {
                ctx.induced.l[i].at(b, j) = lcol[b];
                ctx.induced.r[i].at(b, j) = rcol[b];
            }
        }
    }
    return ctx;
}

/// Coboundary of an image-valued omni-cochain (coordinates in the image
/// basis).
inline Cochain omni_coboundary(const OmniComplex& ctx, const Cochain& f) {
    return coboundary(ctx.induced, f);
}

inline Cochain omni_coboundary(const OmniRep& rho, const Cochain& f) {
    return omni_coboundary(omni_complex(rho), f);
}

inline CohomologyReport omni_cohomology_dims(const OmniComplex& ctx, std::size_t max_degree) {
    return cohomology_dims(ctx.induced, max_degree, /*validate=*/false);
}

inline CohomologyReport omni_cohomology_dims(const OmniRep& rho, std::size_t max_degree) {
    return omni_cohomology_dims(omni_complex(rho), max_degree);
}

/// Correspondence between g-valued cochains and cochains valued in the image
/// of the adjoint omni-representation: frak |-> (ad_L o frak, frak), stored
/// in image coordinates. ctx must be the complex of adjoint_omnirep.
inline Cochain adjoint_to_omni_cochain(const OmniComplex& ctx, const Cochain& frak) {
    const std::size_t n = ctx.rho.algebra.dim;
    if (frak.arity_dim != n || frak.codomain_dim != n)
        throw input_error("adjoint correspondence: cochain must be g-valued");
    const std::size_t p = ctx.image.dim();
    Cochain out = zero_cochain(frak.degree, n, p);
    const std::size_t tuples = tuple_count(n, frak.degree);
    for (std::size_t t = 0; t < tuples; ++t) {
        OmniElement elem = zero_omni(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Rat& xi = frak.coeffs[t * n + i];
            if (xi == 0) continue;
            elem.a = elem.a + xi * ctx.rho.phi[i];
            elem.u[i] += xi;
        }
        const Vec coords = ctx.image.coords(elem);
        for (std::size_t b = 0; b < p; ++b) out.coeffs[t * p + b] = coords[b];
    }
    return out;
}

/// Inverse direction: an image-valued cochain determines its g-valued part
/// through the module component.
inline Cochain omni_to_adjoint_cochain(const OmniComplex& ctx, const Cochain& f) {
    const std::size_t n = ctx.rho.algebra.dim;
    const std::size_t p = ctx.image.dim();
    if (f.arity_dim != n || f.codomain_dim != p)
        throw input_error("adjoint correspondence: cochain must be image-valued");
    Cochain out = zero_cochain(f.degree, n, n);
    const std::size_t tuples = tuple_count(n, f.degree);
    for (std::size_t t = 0; t < tuples; ++t) {
        Vec coords(p);
        for (std::size_t b = 0; b < p; ++b) coords[b] = f.coeffs[t * p + b];
        const OmniElement elem = ctx.image.reconstruct(coords);
        for (std::size_t i = 0; i < n; ++i) out.coeffs[t * n + i] = elem.u[i];
    }
    return out;
}

}  // namespace omnileib
