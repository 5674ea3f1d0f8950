#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "omnileib/algebra.hpp"
#include "omnileib/catalog.hpp"
#include "omnileib/omni.hpp"
#include "omnileib/representation.hpp"

namespace omnileib {

/// Insertion-ordered JSON so serialized documents are byte-stable.
using json = nlohmann::ordered_json;

namespace detail {

inline std::size_t get_dim(const json& doc, const char* key, const std::string& where) {
    if (!doc.contains(key)) throw input_error(where + ": missing \"" + key + "\"");
    const json& v = doc.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw input_error(where + ": \"" + key + "\" must be a non-negative integer");
    return v.get<std::size_t>();
}

inline Rat value_at(const json& v, const std::string& where) {
    if (!v.is_string()) throw input_error(where + ": expected a rational value string \"p\" or \"p/q\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const input_error& e) {
        throw input_error(where + ": " + e.what());
    }
}

inline Matrix matrix_at(const json& v, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!v.is_array() || v.size() != rows)
        throw input_error(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = v.at(i);
        if (!row.is_array() || row.size() != cols)
            throw input_error(where + "[" + std::to_string(i) + "]: expected " +
                              std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = value_at(row.at(j), where + "[" + std::to_string(i) + "][" +
                                                 std::to_string(j) + "]");
    }
    return m;
}

inline Vec vector_at(const json& v, std::size_t len, const std::string& where) {
    if (!v.is_array() || v.size() != len)
        throw input_error(where + ": expected " + std::to_string(len) + " entries");
    Vec out(len);
    for (std::size_t j = 0; j < len; ++j)
        out[j] = value_at(v.at(j), where + "[" + std::to_string(j) + "]");
    return out;
}

inline json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace detail

/// Algebra document: {"dim": n, "bracket": [[i, j, k, "p/q"], ...]} with
/// 1-based indices; omitted entries are zero, duplicates are an error.
inline LeibnizAlgebra algebra_from_json(const json& doc, bool validate = true) {
    const std::size_t n = detail::get_dim(doc, "dim", "algebra");
    if (!doc.contains("bracket") || !doc.at("bracket").is_array())
        throw input_error("algebra: missing \"bracket\" array");
    LeibnizAlgebra g(n);
    std::vector<bool> seen(n * n * n, false);
    const json& entries = doc.at("bracket");
    for (std::size_t t = 0; t < entries.size(); ++t) {
        const std::string where = "bracket[" + std::to_string(t) + "]";
        const json& e = entries.at(t);
        if (!e.is_array() || e.size() != 4)
            throw input_error(where + ": expected [i, j, k, value]");
        std::size_t idx[3];
        for (int s = 0; s < 3; ++s) {
            if (!e.at(s).is_number_integer() && !e.at(s).is_number_unsigned())
                throw input_error(where + ": indices must be integers");
            const long long v = e.at(s).get<long long>();
            if (v < 1 || static_cast<std::size_t>(v) > n)
                throw input_error(where + ": index " + std::to_string(v) + " out of range [1, " +
                                  std::to_string(n) + "]");
            idx[s] = static_cast<std::size_t>(v) - 1;
        }
        const std::size_t flat = (idx[0] * n + idx[1]) * n + idx[2];
        if (seen[flat]) throw input_error(where + ": duplicate (i,j,k) entry");
        seen[flat] = true;
        g.c[flat] = detail::value_at(e.at(3), where);
    }
    if (validate) {
        const LeibnizVerdict v = is_leibniz(g);
        if (!v.ok)
            throw validation_error("algebra fails the Leibniz identity at basis triple (" +
                              std::to_string(v.witness[0]) + "," + std::to_string(v.witness[1]) +
                              "," + std::to_string(v.witness[2]) + ")");
    }
    return g;
}

inline LeibnizAlgebra parse_algebra(const std::string& text, bool validate = true) {
    return algebra_from_json(detail::parse_text(text), validate);
}

inline json algebra_to_json(const LeibnizAlgebra& g) {
    json bracket = json::array();
    for (std::size_t i = 0; i < g.dim; ++i)
        for (std::size_t j = 0; j < g.dim; ++j)
            for (std::size_t k = 0; k < g.dim; ++k)
                if (g.cst(i, j, k) != 0)
                    bracket.push_back({i + 1, j + 1, k + 1, rat_string(g.cst(i, j, k))});
    return json{{"dim", g.dim}, {"bracket", std::move(bracket)}};
}

/// Resolves an algebra reference: a catalog name string or an inline
/// algebra document.
inline LeibnizAlgebra resolve_algebra_ref(const json& ref, bool validate = true) {
    if (ref.is_string()) return catalog_lookup(ref.get<std::string>());
    if (ref.is_object()) return algebra_from_json(ref, validate);
    throw input_error("algebra reference must be a catalog name or an inline algebra object");
}

/// Representation document:
/// {"algebra": name|object, "dimV": d, "l": [n matrices], "r": [n matrices]}
inline Representation rep_from_json(const json& doc, bool validate = true) {
    if (!doc.contains("algebra")) throw input_error("representation: missing \"algebra\"");
    Representation rep;
    rep.algebra = resolve_algebra_ref(doc.at("algebra"), validate);
    rep.dim_v = detail::get_dim(doc, "dimV", "representation");
    const std::size_t n = rep.algebra.dim;
    for (const char* key : {"l", "r"}) {
        if (!doc.contains(key) || !doc.at(key).is_array() || doc.at(key).size() != n)
            throw input_error("representation: \"" + std::string(key) + "\" must list " +
                              std::to_string(n) + " matrices");
        auto& dst = (key[0] == 'l') ? rep.l : rep.r;
        for (std::size_t i = 0; i < n; ++i)
            dst.push_back(detail::matrix_at(doc.at(key).at(i), rep.dim_v, rep.dim_v,
                                            std::string(key) + "[" + std::to_string(i) + "]"));
    }
    if (validate) {
        const RepVerdict v = rep_check(rep);
        if (!v.ok) throw validation_error("representation invalid: " + v.describe());
    }
    return rep;
}

inline Representation parse_rep(const std::string& text, bool validate = true) {
    return rep_from_json(detail::parse_text(text), validate);
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(rat_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json vector_to_json(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rat_string(x));
    return out;
}

inline json rep_to_json(const Representation& rep) {
    json l = json::array();
    json r = json::array();
    for (const auto& m : rep.l) l.push_back(matrix_to_json(m));
    for (const auto& m : rep.r) r.push_back(matrix_to_json(m));
    return json{{"algebra", algebra_to_json(rep.algebra)},
                {"dimV", rep.dim_v},
                {"l", std::move(l)},
                {"r", std::move(r)}};
}

/// Omni-representation document:
/// {"algebra": ..., "dimV": d, "phi": [n matrices], "theta": [n vectors],
///  "graph_phi": [d matrices]?}. graph_phi, when present, names the
/// embedding tensor whose graph is supposed to contain the image.
struct OmniRepDocument {
    OmniRep rho;
    std::optional<std::vector<Matrix>> graph_phi;

    friend bool operator==(const OmniRepDocument&, const OmniRepDocument&) = default;
};

inline OmniRepDocument omnirep_from_json(const json& doc, bool validate = true) {
    if (!doc.contains("algebra")) throw input_error("omni-representation: missing \"algebra\"");
    OmniRepDocument out;
    out.rho.algebra = resolve_algebra_ref(doc.at("algebra"), validate);
    out.rho.dim_v = detail::get_dim(doc, "dimV", "omni-representation");
    const std::size_t n = out.rho.algebra.dim;
    const std::size_t d = out.rho.dim_v;
    if (!doc.contains("phi") || !doc.at("phi").is_array() || doc.at("phi").size() != n)
        throw input_error("omni-representation: \"phi\" must list " + std::to_string(n) + " matrices");
    if (!doc.contains("theta") || !doc.at("theta").is_array() || doc.at("theta").size() != n)
        throw input_error("omni-representation: \"theta\" must list " + std::to_string(n) + " vectors");
    for (std::size_t i = 0; i < n; ++i) {
        out.rho.phi.push_back(
            detail::matrix_at(doc.at("phi").at(i), d, d, "phi[" + std::to_string(i) + "]"));
        out.rho.theta.push_back(
            detail::vector_at(doc.at("theta").at(i), d, "theta[" + std::to_string(i) + "]"));
    }
    if (doc.contains("graph_phi")) {
        if (!doc.at("graph_phi").is_array() || doc.at("graph_phi").size() != d)
            throw input_error("omni-representation: \"graph_phi\" must list " + std::to_string(d) +
                              " matrices");
        std::vector<Matrix> gp;
        for (std::size_t a = 0; a < d; ++a)
            gp.push_back(detail::matrix_at(doc.at("graph_phi").at(a), d, d,
                                           "graph_phi[" + std::to_string(a) + "]"));
        out.graph_phi = std::move(gp);
    }
    if (validate) {
        const OmniVerdict v = omnirep_check(out.rho);
        if (!v.ok) throw validation_error("omni-representation invalid: " + v.describe());
    }
    return out;
}

inline OmniRepDocument parse_omnirep(const std::string& text, bool validate = true) {
    return omnirep_from_json(detail::parse_text(text), validate);
}

inline json omnirep_to_json(const OmniRepDocument& doc) {
    json phi = json::array();
    json theta = json::array();
    for (const auto& m : doc.rho.phi) phi.push_back(matrix_to_json(m));
    for (const auto& v : doc.rho.theta) theta.push_back(vector_to_json(v));
    json out{{"algebra", algebra_to_json(doc.rho.algebra)},
             {"dimV", doc.rho.dim_v},
             {"phi", std::move(phi)},
             {"theta", std::move(theta)}};
    if (doc.graph_phi) {
        json gp = json::array();
        for (const auto& m : *doc.graph_phi) gp.push_back(matrix_to_json(m));
        out["graph_phi"] = std::move(gp);
    }
    return out;
}

}  // namespace omnileib
