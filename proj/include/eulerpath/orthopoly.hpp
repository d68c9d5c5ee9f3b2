#pragma once

/**
 * @file orthopoly.hpp
 * @brief Monic orthogonal polynomials from three-term recurrences.
 *
 * Everything is normalized to the convention
 *
 *   P_{n+1}(y) = (y - s_n) P_n(y) - t_n P_{n-1}(y),   P_0 = 1,
 *
 * so families whose classical recurrences are written with "+ coefficient"
 * store the negated t_n:
 *
 *   euler_coeffs(p):      s_n = x - p/2,  t_n = -n(n+p-1)/4
 *   carlitz_coeffs():     s_n = 0,        t_n = -n^2
 *   bernoulli_coeffs():   s_n = x - 1/2,  t_n = -n^4 / (4(2n+1)(2n-1))
 *   euler_number_coeffs(p): s_n = 0,      t_n = -n(n+p-1)
 *
 * The stored t_n are the true recurrence coefficients: with them the built
 * polynomials are orthogonal under the umbral pairing against the matching
 * moment sequence (Euler and Bernoulli moment functionals are signed, so
 * their t_n are negative; published coefficient tables list |t_n|).
 */

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerpath/polynomial.hpp"
#include "eulerpath/rational.hpp"
#include "eulerpath/series.hpp"

namespace eulerpath {

struct HankelDegeneracyError : std::runtime_error {
    explicit HankelDegeneracyError(std::size_t depth_)
        : std::runtime_error("vanishing Hankel determinant at depth " + std::to_string(depth_)),
          depth(depth_) {}
    std::size_t depth;
};

/// Recurrence coefficient rules (s_n)_{n>=0}, (t_n)_{n>=1} as functions of
/// the index, with XPoly values so x-dependent families fit.
class ThreeTermCoeffs {
public:
    using Rule = std::function<XPoly(std::size_t)>;

    ThreeTermCoeffs(Rule s, Rule t) : s_(std::move(s)), t_(std::move(t)) {}

    /// Explicit finite tables; t indexed from 1 (t[0] ignored if present).
    static ThreeTermCoeffs from_tables(std::vector<XPoly> s, std::vector<XPoly> t) {
        return ThreeTermCoeffs(
            [s = std::move(s)](std::size_t n) {
                if (n >= s.size()) throw std::out_of_range("s_n beyond table depth");
                return s[n];
            },
            [t = std::move(t)](std::size_t n) {
                if (n >= t.size()) throw std::out_of_range("t_n beyond table depth");
                return t[n];
            });
    }

    XPoly s(std::size_t n) const { return s_(n); }

    XPoly t(std::size_t n) const {
        if (n == 0) throw std::invalid_argument("t_0 is not part of a three-term recurrence");
        return t_(n);
    }

private:
    Rule s_;
    Rule t_;
};

inline ThreeTermCoeffs euler_coeffs(unsigned p) {
    const XPoly s0 = XPoly::variable() - XPoly(Rational(p, 2));
    return ThreeTermCoeffs(
        [s0](std::size_t) { return s0; },
        [p](std::size_t n) {
            const long long nn = static_cast<long long>(n);
            return XPoly(Rational(-nn * (nn + p - 1), 4));
        });
}

inline ThreeTermCoeffs carlitz_coeffs() {
    return ThreeTermCoeffs([](std::size_t) { return XPoly(); },
                           [](std::size_t n) {
                               const long long nn = static_cast<long long>(n);
                               return XPoly(Rational(-nn * nn));
                           });
}

inline ThreeTermCoeffs bernoulli_coeffs() {
    const XPoly s0 = XPoly::variable() - XPoly(Rational(1, 2));
    return ThreeTermCoeffs(
        [s0](std::size_t) { return s0; },
        [](std::size_t n) {
            const long long nn = static_cast<long long>(n);
            return XPoly(Rational(-nn * nn * nn * nn, 4 * (2 * nn + 1) * (2 * nn - 1)));
        });
}

/// Coefficients of the monic orthogonal polynomials for the sech^p moment
/// sequence (euler_coeffs(p) specialized at x = p/2 and scaled by 2).
inline ThreeTermCoeffs euler_number_coeffs(unsigned p) {
    return ThreeTermCoeffs([](std::size_t) { return XPoly(); },
                           [p](std::size_t n) {
                               const long long nn = static_cast<long long>(n);
                               return XPoly(Rational(-nn * (nn + p - 1)));
                           });
}

/// Shift law: moments of X + c have s_n -> s_n + c, t_n unchanged.
inline ThreeTermCoeffs shift_coeffs(const ThreeTermCoeffs& c, const XPoly& shift) {
    return ThreeTermCoeffs([c, shift](std::size_t n) { return c.s(n) + shift; },
                           [c](std::size_t n) { return c.t(n); });
}

/// Scale law: moments of C*X have s_n -> C s_n, t_n -> C^2 t_n.
inline ThreeTermCoeffs scale_coeffs(const ThreeTermCoeffs& c, const Rational& factor) {
    if (factor.is_zero()) throw std::invalid_argument("scale factor must be nonzero");
    const Rational sq = factor * factor;
    return ThreeTermCoeffs([c, factor](std::size_t n) { return c.s(n) * XPoly(factor); },
                           [c, sq](std::size_t n) { return c.t(n) * XPoly(sq); });
}

/// Substitutes a rational value for x in both rules.
inline ThreeTermCoeffs specialize_x(const ThreeTermCoeffs& c, const Rational& x0) {
    return ThreeTermCoeffs([c, x0](std::size_t n) { return XPoly(c.s(n).eval(x0)); },
                           [c, x0](std::size_t n) { return XPoly(c.t(n).eval(x0)); });
}

/// P_0 .. P_N from the three-term recurrence; each P_n is monic of degree n.
inline std::vector<YPoly> build_monic_ops(const ThreeTermCoeffs& c, std::size_t n_max) {
    std::vector<YPoly> polys;
    polys.reserve(n_max + 1);
    polys.push_back(YPoly(XPoly(Rational(1))));
    if (n_max == 0) return polys;
    const YPoly y = YPoly::variable();
    polys.push_back(y - YPoly(c.s(0)));
    for (std::size_t n = 1; n < n_max; ++n) {
        YPoly next = (y - YPoly(c.s(n))) * polys[n] - YPoly(c.t(n)) * polys[n - 1];
        polys.push_back(std::move(next));
    }
    return polys;
}

/// Closed form for the monic orthogonal polynomial of the E_n^(p)(x)
/// moment sequence. This is the Meixner-Pollaczek polynomial of parameter
/// p/2 at angle pi/2 with imaginary argument, where the phases cancel and
/// the terminating hypergeometric sum collapses to rational arithmetic:
///
///   ((-1)^n (p)_n / 2^n) sum_{k=0}^n [(-n)_k / ((p)_k k!)] 2^k (y-x+p)_k
///
/// Identical to build_monic_ops(euler_coeffs(p), n)[n]; no complex numbers
/// appear at any point.
inline YPoly euler_ops_closed_form(std::size_t n, unsigned p) {
    const YPoly arg = YPoly::variable() - YPoly(XPoly::variable()) + YPoly(XPoly(Rational(p)));
    const Rational minus_n(-static_cast<long long>(n));
    const Rational p_rat(static_cast<long long>(p));
    YPoly sum;
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational coeff = rising_factorial(minus_n, static_cast<unsigned>(k)) /
                               (rising_factorial(p_rat, static_cast<unsigned>(k)) * Rational::factorial(k)) *
                               Rational::pow2(static_cast<long>(k));
        sum += YPoly(XPoly(coeff)) * rising_factorial(arg, static_cast<unsigned>(k));
    }
    const Rational front = (n % 2 == 0 ? Rational(1) : Rational(-1)) *
                           rising_factorial(p_rat, static_cast<unsigned>(n)) /
                           Rational::pow2(static_cast<long>(n));
    return YPoly(XPoly(front)) * sum;
}

/// Umbral evaluation: substitute y^k -> m_k and collect in Q[x].
inline XPoly umbral_eval(const YPoly& q, const std::vector<XPoly>& moments) {
    if (const auto d = q.degree(); d && *d >= moments.size()) {
        throw std::invalid_argument("umbral evaluation: not enough moments");
    }
    XPoly acc;
    for (std::size_t k = 0; k < q.coefficients().size(); ++k) {
        acc += q.coeff(k) * moments[k];
    }
    return acc;
}

/// Residuals y^r P_n |_{y^k = m_k} for 0 <= r < n <= N, indexed [n][r].
/// Every entry is the zero XPoly when (c, m) is a matched pair.
inline std::vector<std::vector<XPoly>> orthogonality_residuals(const ThreeTermCoeffs& c,
                                                               const std::vector<XPoly>& moments,
                                                               std::size_t n_max) {
    if (moments.size() < 2 * n_max) {
        throw std::invalid_argument("orthogonality residuals: need at least 2N moments");
    }
    const auto polys = build_monic_ops(c, n_max);
    std::vector<std::vector<XPoly>> table(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        table[n].reserve(n);
        for (std::size_t r = 0; r < n; ++r) {
            table[n].push_back(umbral_eval(polys[n].times_variable_pow(r), moments));
        }
    }
    return table;
}

namespace detail {

inline Rational eval_constant_ypoly(const YPoly& q, const Rational& y) {
    const XPoly value = q.eval(XPoly(y));
    if (value.degree() > 0u) throw std::logic_error("expected x-free polynomial");
    return value.constant_term();
}

}  // namespace detail

/// Certifies the convolution identity for the sech^p orthogonal families:
///   sum_k C(n,k) Q_k^(p1)(y1) Q_{n-k}^(p2)(y2) = Q_n^(p1+p2)(y1+y2)
/// by evaluating both sides on the rational grid {0..n}^2. Both sides have
/// degree <= n in each variable, so agreement on the grid is a proof.
inline bool convolution_check(unsigned p1, unsigned p2, std::size_t n) {
    const auto q1 = build_monic_ops(euler_number_coeffs(p1), n);
    const auto q2 = build_monic_ops(euler_number_coeffs(p2), n);
    const auto q12 = build_monic_ops(euler_number_coeffs(p1 + p2), n);
    for (long long a = 0; a <= static_cast<long long>(n); ++a) {
        for (long long b = 0; b <= static_cast<long long>(n); ++b) {
            const Rational y1(a), y2(b);
            Rational lhs;
            for (std::size_t k = 0; k <= n; ++k) {
                lhs += Rational::binomial(n, k) * detail::eval_constant_ypoly(q1[k], y1) *
                       detail::eval_constant_ypoly(q2[n - k], y2);
            }
            if (lhs != detail::eval_constant_ypoly(q12[n], y1 + y2)) return false;
        }
    }
    return true;
}

/// Explicit recurrence tables recovered from a rational moment sequence.
/// t is indexed from 1; t[0] is a zero placeholder.
struct RecurrenceTable {
    std::vector<Rational> s;
    std::vector<Rational> t;
};

/// Table form usable wherever a coefficient rule is expected.
inline ThreeTermCoeffs to_coeffs(const RecurrenceTable& table) {
    std::vector<XPoly> s(table.s.begin(), table.s.end());
    std::vector<XPoly> t(table.t.begin(), table.t.end());
    return ThreeTermCoeffs::from_tables(std::move(s), std::move(t));
}

/// Classical Stieltjes/Gram procedure: successively orthogonalize 1, y,
/// y^2, ... under the pairing <y^j> = m_j, reading off
///   s_n = <y P_n, P_n> / <P_n, P_n>,  t_n = <P_n, P_n> / <P_{n-1}, P_{n-1}>.
/// Requires m_0 = 1 and nonvanishing Hankel determinants up to depth N.
inline RecurrenceTable stieltjes_from_moments(const std::vector<Rational>& m, std::size_t n_max) {
    if (m.empty() || m[0] != Rational(1)) {
        throw std::invalid_argument("stieltjes: moment sequence must start with m_0 = 1");
    }
    if (m.size() < 2 * n_max) throw std::invalid_argument("stieltjes: need at least 2N moments");

    using QPoly = Polynomial<Rational>;
    const auto pair_with_moments = [&m](const QPoly& q) {
        Rational acc;
        for (std::size_t k = 0; k < q.coefficients().size(); ++k) acc += q.coeff(k) * m[k];
        return acc;
    };

    RecurrenceTable out;
    out.t.push_back(Rational(0));  // t_0 placeholder
    QPoly prev;                    // P_{n-1}
    QPoly cur = QPoly(Rational(1));
    Rational h_prev;
    for (std::size_t n = 0; n < n_max; ++n) {
        const Rational h = pair_with_moments(cur * cur);
        if (h.is_zero()) throw HankelDegeneracyError(n);
        const Rational s_n = pair_with_moments((cur * cur).times_variable_pow(1)) / h;
        out.s.push_back(s_n);
        Rational t_n;
        if (n >= 1) {
            t_n = h / h_prev;
            out.t.push_back(t_n);
        }
        QPoly next = (QPoly::variable() - QPoly(s_n)) * cur - QPoly(t_n) * prev;
        prev = std::move(cur);
        cur = std::move(next);
        h_prev = h;
    }
    return out;
}

}  // namespace eulerpath
