#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series and the generating-function pipeline.
 *
 * TruncatedSeries<C> holds exactly order+1 coefficients of a series in z;
 * arithmetic discards every power above the order. The exponential
 * generating functions of interest,
 *
 *   (2/(e^z+1))^p e^{xz}   ->  higher-order Euler polynomials E_n^(p)(x)
 *   (z/(e^z-1))^p e^{xz}   ->  higher-order Bernoulli polynomials B_n^(p)(x)
 *   sech^p(z)              ->  the rational sequence that generalizes the
 *                              Euler numbers to order p
 *
 * are all built from elementary coefficient lists, one inversion, repeated
 * multiplication, and a final n! rescale. This pipeline is the reference
 * oracle the recurrence, matrix and continued-fraction pipelines are
 * checked against.
 */

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eulerpath/polynomial.hpp"
#include "eulerpath/rational.hpp"

namespace eulerpath {

/// Constant-term inverses used by series inversion. Only x-free units are
/// invertible in Q[x], so the XPoly overload insists on degree zero.
inline Rational scalar_inverse(const Rational& c) {
    if (c.is_zero()) throw std::domain_error("series inversion: zero constant term");
    return c.inverse();
}
inline XPoly scalar_inverse(const XPoly& c) {
    if (c.is_zero()) throw std::domain_error("series inversion: zero constant term");
    if (c.degree() != 0u) throw std::domain_error("series inversion: constant term not x-free");
    return XPoly(c.constant_term().inverse());
}

template <class C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, ring_traits<C>::zero()) {}

    static TruncatedSeries constant(C value, std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = std::move(value);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const C& coeff(std::size_t i) const { return c_.at(i); }
    void set_coeff(std::size_t i, C v) { c_.at(i) = std::move(v); }
    const std::vector<C>& coefficients() const { return c_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    /// Cauchy product truncated at the common order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            for (std::size_t j = 0; i + j < a.c_.size(); ++j) {
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    TruncatedSeries scaled(const C& factor) const {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * factor;
        return r;
    }

    /// Multiplies by z^k, dropping everything past the order.
    TruncatedSeries shifted_up(std::size_t k) const {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// Multiplicative inverse via b_n = -(1/a_0) sum_{k=1..n} a_k b_{n-k}.
    TruncatedSeries inverse() const {
        const C inv0 = scalar_inverse(c_[0]);
        TruncatedSeries b(order());
        b.c_[0] = inv0;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            C acc = ring_traits<C>::zero();
            for (std::size_t k = 1; k <= n; ++k) acc = acc + c_[k] * b.c_[n - k];
            b.c_[n] = -(inv0 * acc);
        }
        return b;
    }

    TruncatedSeries pow(unsigned e) const {
        TruncatedSeries acc = constant(ring_traits<C>::one(), order());
        for (unsigned i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

private:
    void require_same_order(const TruncatedSeries& o) const {
        if (c_.size() != o.c_.size()) throw std::invalid_argument("series order mismatch");
    }

    std::vector<C> c_;
};

using Series = TruncatedSeries<XPoly>;
using RationalSeries = TruncatedSeries<Rational>;

namespace detail {

/// Coefficients of (e^z + 1)/2: 1, then 1/(2 n!).
inline Series half_exp_plus_half(std::size_t order) {
    Series s(order);
    s.set_coeff(0, XPoly(Rational(1)));
    for (std::size_t n = 1; n <= order; ++n) {
        s.set_coeff(n, XPoly(Rational(1, 2) / Rational::factorial(n)));
    }
    return s;
}

/// Coefficients of (e^z - 1)/z: 1/(n+1)!. The z factor of e^z - 1 is
/// divided out up front so the inverse is z/(e^z - 1) directly.
inline Series exp_minus_one_over_z(std::size_t order) {
    Series s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        s.set_coeff(n, XPoly(Rational(1) / Rational::factorial(n + 1)));
    }
    return s;
}

/// Coefficients of e^{xz}: x^n / n!, built directly as monomials.
inline Series exp_x(std::size_t order) {
    Series s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        s.set_coeff(n, XPoly::monomial(Rational(1) / Rational::factorial(n), n));
    }
    return s;
}

inline RationalSeries cosh_series(std::size_t order) {
    RationalSeries s(order);
    for (std::size_t n = 0; n <= order; n += 2) {
        s.set_coeff(n, Rational(1) / Rational::factorial(n));
    }
    return s;
}

}  // namespace detail

/// E_0^(p)(x) .. E_N^(p)(x) from (2/(e^z+1))^p e^{xz}; E_n^(p) is monic of
/// degree n.
inline std::vector<XPoly> euler_polynomials(unsigned p, std::size_t n_max) {
    Series s = detail::half_exp_plus_half(n_max).inverse().pow(p) * detail::exp_x(n_max);
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(s.coeff(n) * XPoly(Rational::factorial(n)));
    return out;
}

/// B_0^(p)(x) .. B_N^(p)(x) from (z/(e^z-1))^p e^{xz}.
inline std::vector<XPoly> bernoulli_polynomials(unsigned p, std::size_t n_max) {
    Series s = detail::exp_minus_one_over_z(n_max).inverse().pow(p) * detail::exp_x(n_max);
    std::vector<XPoly> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(s.coeff(n) * XPoly(Rational::factorial(n)));
    return out;
}

/// n!-scaled coefficients of sech^p(z): 2^n E_n^(p)(p/2) as exact rationals.
/// Odd entries vanish; p = 1 gives the Euler numbers 1, 0, -1, 0, 5, 0, -61, ...
inline std::vector<Rational> euler_numbers(unsigned p, std::size_t n_max) {
    RationalSeries s = detail::cosh_series(n_max).inverse().pow(p);
    std::vector<Rational> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(s.coeff(n) * Rational::factorial(n));
    return out;
}

/// Moment sequence of a sum of independent variables:
/// c_n = sum_k C(n,k) a_k b_{n-k}.
template <class T>
std::vector<T> binomial_convolve(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("moment sequence length mismatch");
    std::vector<T> out;
    out.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        T acc{};
        for (std::size_t k = 0; k <= n; ++k) {
            acc = acc + T(Rational::binomial(n, k)) * a[k] * b[n - k];
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace eulerpath
