#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omnileib/balavoine.hpp"
#include "omnileib/catalog.hpp"
#include "omnileib/cohomology.hpp"
#include "omnileib/io.hpp"
#include "omnileib/omni.hpp"

namespace omnileib {

/// Exit codes: 0 success, 1 mathematical failure (an identity or theorem
/// instance does not hold), 2 input error (unreadable, malformed or
/// ill-shaped documents and arguments).
namespace cli {

inline std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Catalog name, or a path to an algebra document.
inline LeibnizAlgebra resolve_algebra_arg(const std::string& arg, bool validate) {
    if (catalog_has(arg)) return catalog_lookup(arg);
    std::ifstream probe(arg);
    if (probe.good()) return parse_algebra(load_file(arg), validate);
    throw input_error("\"" + arg + "\" is neither a catalog algebra nor a readable file");
}

inline void print_dims_table(std::ostream& out, const CohomologyReport& report) {
    out << std::left << std::setw(8) << "degree" << std::setw(10) << "dim C^k" << std::setw(10)
        << "rank d_k" << "dim H^k\n";
    for (std::size_t k = 0; k < report.h_dims.size(); ++k)
        out << std::left << std::setw(8) << k << std::setw(10) << report.cochain_dims[k]
            << std::setw(10) << report.ranks[k] << report.h_dims[k] << "\n";
}

inline json dims_json(const std::string& algebra, const std::string& coefficients,
                      std::size_t max_degree, const CohomologyReport& report,
                      std::optional<std::size_t> image_dim = std::nullopt) {
    json out{{"algebra", algebra}, {"coefficients", coefficients}, {"max_degree", max_degree}};
    if (image_dim) out["image_dim"] = *image_dim;
    out["cochain_dims"] = report.cochain_dims;
    out["ranks"] = report.ranks;
    out["h_dims"] = report.h_dims;
    return out;
}

inline int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    const json doc = detail::parse_text(load_file(path));
    if (!doc.is_object()) throw input_error(path + ": document must be a JSON object");
    if (doc.contains("bracket")) {
        const LeibnizAlgebra g = algebra_from_json(doc, /*validate=*/false);
        const LeibnizVerdict v = is_leibniz(g);
        if (v.ok) {
            out << "valid Leibniz algebra, dim " << g.dim << "\n";
            return 0;
        }
        err << "Leibniz identity fails at basis triple (" << v.witness[0] << "," << v.witness[1]
            << "," << v.witness[2] << "), defect =";
        for (const auto& x : v.defect) err << " " << rat_string(x);
        err << "\n";
        return 1;
    }
    if (doc.contains("phi")) {
        const OmniRepDocument d = omnirep_from_json(doc, /*validate=*/false);
        const OmniVerdict v = omnirep_check(d.rho);
        if (!v.ok) {
            err << "omni-representation check failed: " << v.describe() << "\n";
            return 1;
        }
        if (d.graph_phi) {
            if (!graph_check(*d.graph_phi)) {
                err << "graph_phi is not an embedding tensor (graph not closed under the bracket)\n";
                return 1;
            }
            try {
                induced_lr(d.rho, *d.graph_phi, /*validate=*/false);
            } catch (const validation_error& e) {
                err << e.what() << "\n";
                return 1;
            }
        }
        out << "valid omni-representation, dim V = " << d.rho.dim_v << "\n";
        return 0;
    }
    if (doc.contains("l")) {
        const Representation rep = rep_from_json(doc, /*validate=*/false);
        const RepVerdict v = rep_check(rep);
        if (!v.ok) {
            err << "representation check failed: " << v.describe() << "\n";
            return 1;
        }
        out << "valid representation, dim V = " << rep.dim_v << "\n";
        return 0;
    }
    throw input_error(path + ": unrecognized document (expected an algebra, representation or "
                             "omni-representation)");
}

inline Representation resolve_rep(const LeibnizAlgebra& g, const std::string& selector,
                                  bool validate) {
    if (selector == "trivial") return trivial_rep(g, 1);
    if (selector == "adjoint") return adjoint_rep(g);
    const Representation rep = parse_rep(load_file(selector), validate);
    if (rep.algebra != g)
        throw input_error("representation file \"" + selector +
                          "\" is over a different algebra than the one given");
    return rep;
}

inline OmniRep resolve_omnirep(const LeibnizAlgebra& g, const std::string& selector,
                               bool validate) {
    if (selector == "adjoint") return adjoint_omnirep(g);
    if (selector == "trivial" || selector.rfind("trivial:", 0) == 0) {
        const std::vector<Vec> functionals = trivial_omnirep_functionals(g);
        if (selector == "trivial") {
            if (functionals.empty()) return zero_omnirep(g);
            return trivial_omnirep(g, functionals[0]);
        }
        std::size_t idx = 0;
        try {
            idx = std::stoul(selector.substr(8));
        } catch (...) {
            throw input_error("bad omni-representation selector: \"" + selector + "\"");
        }
        if (idx < 1 || idx > functionals.size())
            throw input_error("trivial omni-representation index " + std::to_string(idx) +
                              " out of range [1, " + std::to_string(functionals.size()) + "]");
        return trivial_omnirep(g, functionals[idx - 1]);
    }
    const OmniRepDocument doc = parse_omnirep(load_file(selector), validate);
    if (doc.rho.algebra != g)
        throw input_error("omni-representation file \"" + selector +
                          "\" is over a different algebra than the one given");
    return doc.rho;
}

inline int cmd_cohomology(const std::string& algebra_arg, const std::string& rep_arg,
                          std::size_t max_degree, bool as_json, bool no_validate,
                          std::ostream& out) {
    const LeibnizAlgebra g = resolve_algebra_arg(algebra_arg, !no_validate);
    const Representation rep = resolve_rep(g, rep_arg, !no_validate);
    const CohomologyReport report = cohomology_dims(rep, max_degree, !no_validate);
    if (as_json)
        out << dims_json(algebra_arg, rep_arg, max_degree, report).dump(2) << "\n";
    else
        print_dims_table(out, report);
    return 0;
}

inline int cmd_omni_cohomology(const std::string& algebra_arg, const std::string& omnirep_arg,
                               std::size_t max_degree, bool as_json, bool no_validate,
                               std::ostream& out) {
    const LeibnizAlgebra g = resolve_algebra_arg(algebra_arg, !no_validate);
    const OmniRep rho = resolve_omnirep(g, omnirep_arg, !no_validate);
    const OmniComplex ctx = omni_complex(rho, !no_validate);
    const CohomologyReport report = omni_cohomology_dims(ctx, max_degree);
    if (as_json)
        out << dims_json(algebra_arg, omnirep_arg, max_degree, report, ctx.image.dim()).dump(2)
            << "\n";
    else {
        out << "image dimension: " << ctx.image.dim() << "\n";
        print_dims_table(out, report);
    }
    return 0;
}

inline int cmd_compare(const std::string& algebra_arg, const std::string& mode,
                       std::size_t max_degree, std::ostream& out) {
    const LeibnizAlgebra g = resolve_algebra_arg(algebra_arg, true);
    CohomologyReport lp;
    CohomologyReport om;
    std::string lp_label;
    if (mode == "trivial") {
        lp = cohomology_dims(trivial_rep(g, 1), max_degree);
        const std::vector<Vec> functionals = trivial_omnirep_functionals(g);
        const OmniRep rho =
            functionals.empty() ? zero_omnirep(g) : trivial_omnirep(g, functionals[0]);
        om = omni_cohomology_dims(rho, max_degree);
        lp_label = "trivial";
    } else if (mode == "adjoint") {
        lp = cohomology_dims(adjoint_rep(g), max_degree);
        om = omni_cohomology_dims(adjoint_omnirep(g), max_degree);
        lp_label = "adjoint";
    } else if (mode.rfind("graph:", 0) == 0) {
        const OmniRepDocument doc = parse_omnirep(load_file(mode.substr(6)), true);
        if (doc.rho.algebra != g)
            throw input_error("graph file is over a different algebra than the one given");
        if (!doc.graph_phi)
            throw input_error("graph mode needs a document with a \"graph_phi\" field");
        const Representation rep = induced_lr(doc.rho, *doc.graph_phi);
        lp = cohomology_dims(rep, max_degree);
        om = omni_cohomology_dims(doc.rho, max_degree);
        lp_label = "induced (l,r)";
    } else {
        throw input_error("unknown compare mode: \"" + mode +
                          "\" (expected trivial, adjoint or graph:<file>)");
    }
    bool equal = true;
    out << std::left << std::setw(8) << "degree" << std::setw(20) << ("H^k " + lp_label)
        << std::setw(12) << "H^k omni" << "equal\n";
    for (std::size_t k = 0; k < lp.h_dims.size(); ++k) {
        const bool eq = lp.h_dims[k] == om.h_dims[k];
        equal = equal && eq;
        out << std::left << std::setw(8) << k << std::setw(20) << lp.h_dims[k] << std::setw(12)
            << om.h_dims[k] << (eq ? "yes" : "NO") << "\n";
    }
    out << "verdict: " << (equal ? "EQUAL" : "DIFFERENT") << "\n";
    return equal ? 0 : 1;
}

inline int cmd_mc_check(const std::string& path, std::ostream& out, std::ostream& err) {
    const Representation rep = parse_rep(load_file(path), /*validate=*/false);
    const RepVerdict v = rep_check(rep);
    if (!v.ok) {
        err << "not a representation: " << v.describe() << "\n";
        return 1;
    }
    const McVerdict mc = mc_check(rep);
    if (mc.ok) {
        out << "Maurer-Cartan equation holds for rbar on the semidirect product\n";
        return 0;
    }
    err << "Maurer-Cartan equation fails at basis triple (" << mc.witness[0] << ","
        << mc.witness[1] << "," << mc.witness[2] << "), component " << mc.component << "\n";
    return 1;
}

namespace detail {

struct SelftestRng {
    std::mt19937_64 eng;
    explicit SelftestRng(std::uint64_t seed) : eng(seed) {}
    std::size_t pick(std::size_t n) { return static_cast<std::size_t>(eng() % n); }
    Rat value() {
        const std::size_t r = pick(8);
        if (r < 4) return Rat(0);
        const int vals[4] = {-2, -1, 1, 2};
        return Rat(vals[r - 4]);
    }
};

inline Cochain random_g_cochain(SelftestRng& rng, std::size_t degree, std::size_t n) {
    Cochain c = zero_cochain(degree, n, n);
    for (auto& x : c.coeffs) x = rng.value();
    return c;
}

}  // namespace detail

/// Randomized graded Lie algebra checks for the insertion bracket:
/// graded skew-symmetry, graded Jacobi, and the square-vs-Leibniz criterion.
inline int cmd_balavoine_selftest(std::uint64_t seed, std::size_t trials, std::ostream& out) {
    detail::SelftestRng rng(seed);
    std::size_t skew_fail = 0;
    std::size_t jacobi_fail = 0;
    std::size_t square_fail = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = 1 + rng.pick(3);
        const std::size_t dp = 1 + rng.pick(3);
        const std::size_t dq = 1 + rng.pick(3);
        const std::size_t dr = 1 + rng.pick(3);
        const Cochain P = detail::random_g_cochain(rng, dp, n);
        const Cochain Q = detail::random_g_cochain(rng, dq, n);
        const Cochain R = detail::random_g_cochain(rng, dr, n);
        const std::size_t p = dp - 1, q = dq - 1, r = dr - 1;

        Cochain skew = bracket_b(P, Q);
        const Cochain qp = bracket_b(Q, P);
        skew = ((p * q) % 2 == 0) ? cochain_add(std::move(skew), qp)
                                  : cochain_sub(std::move(skew), qp);
        if (!skew.is_zero()) ++skew_fail;

        const Cochain j1 = bracket_b(bracket_b(P, Q), R);
        const Cochain j2 = bracket_b(bracket_b(Q, R), P);
        const Cochain j3 = bracket_b(bracket_b(R, P), Q);
        Cochain jac = cochain_scale(Rat(((p * r) % 2 == 0) ? 1 : -1), j1);
        jac = cochain_add(std::move(jac), cochain_scale(Rat(((q * p) % 2 == 0) ? 1 : -1), j2));
        jac = cochain_add(std::move(jac), cochain_scale(Rat(((r * q) % 2 == 0) ? 1 : -1), j3));
        if (!jac.is_zero()) ++jacobi_fail;

        LeibnizAlgebra cand(n);
        for (auto& x : cand.c) x = rng.value();
        const Cochain alpha = algebra_bracket_cochain(cand);
        const bool square_zero = bracket_b(alpha, alpha).is_zero();
        if (square_zero != is_leibniz(cand).ok) ++square_fail;
    }
    out << "graded skew-symmetry: " << (trials - skew_fail) << "/" << trials << " trials ok\n";
    out << "graded Jacobi identity: " << (trials - jacobi_fail) << "/" << trials << " trials ok\n";
    out << "[alpha,alpha] = 0 iff Leibniz: " << (trials - square_fail) << "/" << trials
        << " trials ok\n";
    const bool ok = skew_fail == 0 && jacobi_fail == 0 && square_fail == 0;
    out << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

inline int cmd_catalog(const std::string& action, const std::string& name, std::ostream& out) {
    if (action == "list") {
        for (const auto& e : catalog()) out << e.name << " (dim " << e.algebra.dim << ")\n";
        return 0;
    }
    if (action == "show") {
        const LeibnizAlgebra& g = catalog_lookup(name);
        out << name << ": dim " << g.dim << "\n";
        bool any = false;
        for (std::size_t i = 0; i < g.dim; ++i)
            for (std::size_t j = 0; j < g.dim; ++j) {
                bool nz = false;
                for (std::size_t k = 0; k < g.dim; ++k)
                    if (g.cst(i, j, k) != 0) nz = true;
                if (!nz) continue;
                any = true;
                out << "  [e_" << i + 1 << ", e_" << j + 1 << "] =";
                bool first = true;
                for (std::size_t k = 0; k < g.dim; ++k) {
                    const Rat& c = g.cst(i, j, k);
                    if (c == 0) continue;
                    out << (first ? " " : " + ") << rat_string(c) << "*e_" << k + 1;
                    first = false;
                }
                out << "\n";
            }
        if (!any) out << "  (abelian)\n";
        return 0;
    }
    throw input_error("unknown catalog action: \"" + action + "\" (expected list or show)");
}

}  // namespace cli

/// Parses and runs one CLI invocation; args excludes the program name.
/// All reports go to `out`, errors to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact-arithmetic calculator for Leibniz algebras, their cohomology, "
                 "and omni-representations"};
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "check a JSON document against its defining identities");
    std::string validate_file;
    validate->add_option("file", validate_file, "algebra, representation or omni-representation document")
        ->required();

    auto* cohomology = app.add_subcommand("cohomology", "cochain/cohomology dimension table");
    std::string coh_algebra, coh_rep = "trivial";
    std::size_t coh_degree = 3;
    bool coh_json = false, coh_no_validate = false;
    cohomology->add_option("algebra", coh_algebra, "catalog name or algebra file")->required();
    cohomology->add_option("--rep", coh_rep, "trivial | adjoint | <representation file>");
    cohomology->add_option("--max-degree", coh_degree, "top degree (default 3, at most 6)");
    cohomology->add_flag("--json", coh_json, "machine-readable output");
    cohomology->add_flag("--no-validate", coh_no_validate, "skip identity checks on inputs");

    auto* omni = app.add_subcommand("omni-cohomology", "omni-cohomology dimension table");
    std::string omni_algebra, omni_rep = "adjoint";
    std::size_t omni_degree = 3;
    bool omni_json = false, omni_no_validate = false;
    omni->add_option("algebra", omni_algebra, "catalog name or algebra file")->required();
    omni->add_option("--omnirep", omni_rep, "trivial | trivial:<k> | adjoint | <omni-representation file>");
    omni->add_option("--max-degree", omni_degree, "top degree (default 3, at most 6)");
    omni->add_flag("--json", omni_json, "machine-readable output");
    omni->add_flag("--no-validate", omni_no_validate, "skip identity checks on inputs");

    auto* compare = app.add_subcommand("compare",
                                       "side-by-side (l,r)-cohomology vs omni-cohomology dimensions");
    std::string cmp_algebra, cmp_mode = "adjoint";
    std::size_t cmp_degree = 3;
    compare->add_option("algebra", cmp_algebra, "catalog name or algebra file")->required();
    compare->add_option("--mode", cmp_mode, "trivial | adjoint | graph:<file>");
    compare->add_option("--max-degree", cmp_degree, "top degree (default 3, at most 6)");

    auto* mc = app.add_subcommand("mc-check", "Maurer-Cartan verdict for the right action of a representation");
    std::string mc_file;
    mc->add_option("file", mc_file, "representation document")->required();

    auto* selftest = app.add_subcommand("balavoine-selftest", "randomized graded Lie algebra checks");
    std::uint64_t st_seed = 0;
    std::size_t st_trials = 200;
    selftest->add_option("--seed", st_seed, "random seed (default 0)");
    selftest->add_option("--trials", st_trials, "number of trials (default 200)");

    auto* cat = app.add_subcommand("catalog", "list or show the built-in algebras");
    std::string cat_action = "list", cat_name;
    cat->add_option("action", cat_action, "list | show");
    cat->add_option("name", cat_name, "algebra name for show");

    std::vector<const char*> argv;
    argv.push_back("omnileib");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return cli::cmd_validate(validate_file, out, err);
        if (app.got_subcommand(cohomology))
            return cli::cmd_cohomology(coh_algebra, coh_rep, coh_degree, coh_json, coh_no_validate,
                                       out);
        if (app.got_subcommand(omni))
            return cli::cmd_omni_cohomology(omni_algebra, omni_rep, omni_degree, omni_json,
                                            omni_no_validate, out);
        if (app.got_subcommand(compare))
            return cli::cmd_compare(cmp_algebra, cmp_mode, cmp_degree, out);
        if (app.got_subcommand(mc)) return cli::cmd_mc_check(mc_file, out, err);
        if (app.got_subcommand(selftest)) return cli::cmd_balavoine_selftest(st_seed, st_trials, out);
        if (app.got_subcommand(cat)) return cli::cmd_catalog(cat_action, cat_name, out);
    } catch (const validation_error& e) {
        err << "validation failed: " << e.what() << "\n";
        return 1;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return 1;
    }
    err << "input error: no subcommand given\n";
    return 2;
}

}  // namespace omnileib
