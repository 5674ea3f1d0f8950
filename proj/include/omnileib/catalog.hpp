#pragma once

#include <string>
#include <utility>
#include <vector>

#include "omnileib/algebra.hpp"

namespace omnileib {

struct CatalogEntry {
    std::string name;
    LeibnizAlgebra algebra;
};

namespace detail {

inline LeibnizAlgebra abelian(std::size_t n) { return LeibnizAlgebra(n); }

// [e2,e2] = e1. The smallest non-Lie Leibniz algebra.
inline LeibnizAlgebra make_l2() {
    LeibnizAlgebra g(2);
    g.cst(1, 1, 0) = 1;
    return g;
}

// Nonabelian 2-dimensional Lie algebra: [e1,e2] = e2.
inline LeibnizAlgebra make_lie2() {
    LeibnizAlgebra g(2);
    g.cst(0, 1, 1) = 1;
    g.cst(1, 0, 1) = -1;
    return g;
}

// Three-dimensional non-Lie Leibniz algebra: [e2,e2] = e1, [e3,e2] = e1.
inline LeibnizAlgebra make_n3() {
    LeibnizAlgebra g(3);
    g.cst(1, 1, 0) = 1;
    g.cst(2, 1, 0) = 1;
    return g;
}

// Heisenberg Lie algebra: [e1,e2] = e3.
inline LeibnizAlgebra make_heisenberg3() {
    LeibnizAlgebra g(3);
    g.cst(0, 1, 2) = 1;
    g.cst(1, 0, 2) = -1;
    return g;
}

// sl2 with basis (e, f, h) = (e1, e2, e3): [e1,e2] = e3, [e3,e1] = 2e1,
// [e3,e2] = -2e2. Perfect: [g,g] = g.
inline LeibnizAlgebra make_sl2() {
    LeibnizAlgebra g(3);
    g.cst(0, 1, 2) = 1;
    g.cst(1, 0, 2) = -1;
    g.cst(2, 0, 0) = 2;
    g.cst(0, 2, 0) = -2;
    g.cst(2, 1, 1) = -2;
    g.cst(1, 2, 1) = 2;
    return g;
}

}  // namespace detail

/// Built-in example algebras, in a fixed listing order. Every entry passes
/// is_leibniz (enforced by the test suite against the brute-force oracle).
inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"abelian1", detail::abelian(1)},     {"abelian2", detail::abelian(2)},
        {"abelian3", detail::abelian(3)},     {"L2", detail::make_l2()},
        {"lie2", detail::make_lie2()},        {"N3", detail::make_n3()},
        {"heisenberg3", detail::make_heisenberg3()}, {"sl2", detail::make_sl2()},
    };
    return entries;
}

inline std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
}

inline const LeibnizAlgebra& catalog_lookup(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e.algebra;
    throw input_error("unknown catalog algebra: \"" + name + "\"");
}

inline bool catalog_has(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return true;
    return false;
}

}  // namespace omnileib
