#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace omnileib {

/// Exact rational scalar. The backend keeps every value in canonical form
/// (gcd-reduced, denominator > 0) after each arithmetic operation, so
/// equality is plain coefficient equality everywhere in this library.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Coordinate vector over Rat.
using Vec = std::vector<Rat>;

/// Malformed user input: bad dimensions, indices, value strings, documents.
class input_error : public std::runtime_error {
  public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Well-formed input that fails its defining mathematical identities
/// (Leibniz identity, representation axioms, homomorphism conditions, ...).
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A broken internal invariant that no valid input should be able to trigger.
class invariant_error : public std::logic_error {
  public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

/// Parses "p" or "p/q" (optional sign on either part, q != 0).
inline Rat parse_rational(const std::string& text) {
    const auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        const std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto to_big = [](std::string s) {
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return BigInt(s);
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_int(num)) throw input_error("not a rational value: \"" + text + "\"");
    if (slash == std::string::npos) return Rat(to_big(num));
    const std::string den = text.substr(slash + 1);
    if (!is_int(den)) throw input_error("not a rational value: \"" + text + "\"");
    const BigInt d = to_big(den);
    if (d == 0) throw input_error("zero denominator: \"" + text + "\"");
    return Rat(to_big(num), d);
}

/// Formats as "p" or "p/q"; inverse of parse_rational on canonical values.
inline std::string rat_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// y += a * x
inline void vec_axpy(Vec& y, const Rat& a, const Vec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

inline Vec vec_add(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Vec vec_sub(Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Vec vec_scale(const Rat& a, Vec x) {
    for (auto& v : x) v *= a;
    return x;
}

/// Standard basis vector e_i (0-based) of length n.
inline Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

}  // namespace omnileib
