#pragma once

/**
 * @file format.hpp
 * @brief Rendering and exact serialization of rationals and polynomials.
 *
 * Plain text prints polynomials in descending powers with explicit
 * rational coefficients ("x^2 - 2x + 1/2"); LaTeX mirrors the same reading
 * order with \frac for fractions. JSON carries coefficients ascending as
 * exact "num/den" strings so every emitted value re-parses bit-exactly.
 */

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eulerpath/polynomial.hpp"
#include "eulerpath/rational.hpp"

namespace eulerpath {

using json = nlohmann::json;

namespace detail {

/// One monomial "c v^k" with |c| already separated from its sign.
inline void append_monomial(std::ostringstream& os, const Rational& abs_coeff, std::size_t power,
                            const std::string& var) {
    const bool unit = abs_coeff == Rational(1);
    if (power == 0) {
        os << abs_coeff.str();
        return;
    }
    if (!unit) {
        if (abs_coeff.is_integer()) {
            os << abs_coeff.str();
        } else {
            os << "(" << abs_coeff.str() << ")";
        }
    }
    os << var;
    if (power > 1) os << "^" << power;
}

}  // namespace detail

inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const XPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        detail::append_monomial(os, negative ? -c : c, i, var);
    }
    return os.str();
}

/// YPoly with non-constant coefficients parenthesized:
/// "y^2 + (-2x + 2)y + (x^2 - 2x + 3/2)".
inline std::string to_string(const YPoly& p, const std::string& var = "y") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const XPoly c = p.coeff(i);
        if (c.is_zero()) continue;
        if (c.degree() == 0u) {
            const Rational r = c.constant_term();
            const bool negative = r.sign() < 0;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            detail::append_monomial(os, negative ? -r : r, i, var);
            continue;
        }
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(c) << ")";
        if (i >= 1) os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

inline std::string to_latex(const Rational& r) {
    if (r.is_integer()) return r.str();
    const Rational a = r.sign() < 0 ? -r : r;
    std::string out = r.sign() < 0 ? "-" : "";
    return out + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

inline std::string to_latex(const XPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const Rational c = p.coeff(i);
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational a = negative ? -c : c;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? "-" : "+");
        }
        if (i == 0) {
            os << to_latex(a);
        } else {
            if (a != Rational(1)) os << to_latex(a);
            os << var;
            if (i > 1) os << "^{" << i << "}";
        }
    }
    return os.str();
}

inline std::string to_latex(const YPoly& p, const std::string& var = "y") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const XPoly c = p.coeff(i);
        if (c.is_zero()) continue;
        std::string coeff_text;
        bool negative = false;
        if (c.degree() == 0u) {
            const Rational r = c.constant_term();
            negative = r.sign() < 0;
            const Rational a = negative ? -r : r;
            if (i == 0 || a != Rational(1)) coeff_text = to_latex(a);
        } else {
            coeff_text = "\\left(" + to_latex(c) + "\\right)";
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? "-" : "+");
        }
        os << coeff_text;
        if (i >= 1) os << var;
        if (i > 1) os << "^{" << i << "}";
    }
    return os.str();
}

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const XPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

inline json to_json(const YPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coefficients()) arr.push_back(to_json(c));
    return arr;
}

inline Rational rational_from_json(const json& j) { return Rational::from_string(j.get<std::string>()); }

inline XPoly xpoly_from_json(const json& j) {
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return XPoly(std::move(coeffs));
}

inline YPoly ypoly_from_json(const json& j) {
    std::vector<XPoly> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) coeffs.push_back(xpoly_from_json(c));
    return YPoly(std::move(coeffs));
}

}  // namespace eulerpath
