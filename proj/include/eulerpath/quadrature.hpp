#pragma once

/**
 * @file quadrature.hpp
 * @brief Floating-point check of the sech-density moment interpretation.
 *
 * The density sech(pi t) integrates to 1 and its moments recover the Euler
 * polynomial values at 1/2: the underlying random variable enters the
 * moment formula scaled by the imaginary unit, so
 *
 *   E_n(1/2) = i^n * integral t^n sech(pi t) dt.
 *
 * Odd integrals vanish by symmetry and even ones pick up the phase
 * (-1)^{n/2}; sech_moment folds that phase into the returned value, which
 * therefore approximates E_n / 2^n directly (e.g. -61/64 at n = 6).
 *
 * This module is the only floating-point code in the library and nothing
 * exact depends on it.
 */

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eulerpath/polynomial.hpp"
#include "eulerpath/rational.hpp"
#include "eulerpath/series.hpp"

namespace eulerpath {

struct QuadratureResult {
    double value = 0.0;
    double estimated_error = 0.0;
    double tail_bound = 0.0;
};

namespace detail {

inline double sech_pi(double t) {
    const double e = std::exp(-M_PI * std::abs(t));
    return 2.0 * e / (1.0 + e * e);
}

/// Gauss-Kronrod 7-15 on [a, b] with error estimate from |G7 - K15|.
template <class F>
double gk15(const F& f, double a, double b, double& err) {
    static const double abscissae[8] = {
        0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
        0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
    static const double wk[8] = {
        0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
        0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
    static const double wg[4] = {
        0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double k15 = wk[0] * f0;
    double g7 = wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * abscissae[i];
        const double fsum = f(mid + dx) + f(mid - dx);
        k15 += wk[i] * fsum;
        if (i % 2 == 0) g7 += wg[i / 2] * fsum;
    }
    k15 *= half;
    g7 *= half;
    err = std::pow(200.0 * std::abs(k15 - g7), 1.5);
    return k15;
}

/// Adaptive bisection until the summed error estimate fits the budget.
template <class F>
double adaptive_quad(const F& f, double a, double b, double abs_tol, double& err_out) {
    struct Interval {
        double a, b;
    };
    std::vector<Interval> stack{{a, b}};
    double total = 0.0;
    double err_total = 0.0;
    int evaluations = 0;
    while (!stack.empty()) {
        if (++evaluations > 20000) {
            throw std::runtime_error("quadrature did not converge to the requested tolerance");
        }
        const Interval iv = stack.back();
        stack.pop_back();
        double err = 0.0;
        const double s = gk15(f, iv.a, iv.b, err);
        const double width_share = (iv.b - iv.a) / (b - a);
        if (err <= abs_tol * width_share || (iv.b - iv.a) < 1e-12) {
            total += s;
            err_total += err;
            continue;
        }
        const double mid = 0.5 * (iv.a + iv.b);
        stack.push_back({iv.a, mid});
        stack.push_back({mid, iv.b});
    }
    err_out = err_total;
    return total;
}

/// 2 * integral_T^inf t^n * 2 e^{-pi t} dt, an upper bound for both tails
/// of t^n sech(pi t) since sech(pi t) <= 2 e^{-pi t} for t >= 0.
inline double tail_bound_beyond(unsigned n, double cutoff) {
    // 4 * n!/pi^{n+1} * e^{-pi T} * sum_{k=0}^n (pi T)^k / k!
    double sum = 0.0;
    double term = 1.0;
    const double pt = M_PI * cutoff;
    for (unsigned k = 0; k <= n; ++k) {
        sum += term;
        term *= pt / static_cast<double>(k + 1);
    }
    double fact_over_pow = 1.0;  // n! / pi^{n+1}
    for (unsigned k = 1; k <= n; ++k) fact_over_pow *= static_cast<double>(k) / M_PI;
    fact_over_pow /= M_PI;
    return 4.0 * fact_over_pow * std::exp(-pt) * sum;
}

}  // namespace detail

/// Numerical E_n(1/2) = i^n * integral t^n sech(pi t) dt, with the cutoff T
/// chosen so the analytic tail bound stays below tol/2 and the quadrature
/// budgeted with the other half.
inline QuadratureResult sech_moment(unsigned n, double tol) {
    if (n > 20) throw std::invalid_argument("sech moment: n > 20 exceeds double precision");
    if (tol < 1e-12) throw std::invalid_argument("sech moment: tolerance below 1e-12");

    double cutoff = std::max(4.0, static_cast<double>(n));
    while (detail::tail_bound_beyond(n, cutoff) >= tol / 2 && cutoff < 200.0) cutoff += 1.0;
    const double tail = detail::tail_bound_beyond(n, cutoff);
    if (tail >= tol / 2) throw std::runtime_error("sech moment: tail bound not achievable");

    const auto integrand = [n](double t) { return std::pow(t, static_cast<int>(n)) * detail::sech_pi(t); };
    QuadratureResult result;
    const double raw =
        detail::adaptive_quad(integrand, -cutoff, cutoff, tol / 2, result.estimated_error);
    result.tail_bound = tail;
    const double phase = (n % 2 == 0 && (n / 2) % 2 == 1) ? -1.0 : 1.0;
    result.value = phase * raw;
    return result;
}

/// Checks the order-p moment interpretation at x = p/2: the p-fold binomial
/// convolution of the numeric sech moments must match the exact
/// E_n^(p)(p/2) within tol.
inline bool convolved_moment_check(unsigned p, unsigned n, double tol) {
    if (p < 1 || p > 3) throw std::invalid_argument("convolved moment check: p must be 1..3");
    if (n > 10) throw std::invalid_argument("convolved moment check: n must be <= 10");

    const double inner_tol = std::max(tol * 1e-3, 1e-12);
    std::vector<double> single(n + 1);
    for (unsigned k = 0; k <= n; ++k) single[k] = sech_moment(k, inner_tol).value;

    // p-fold convolution computed as (p-1) pairwise convolutions.
    std::vector<double> acc = single;
    for (unsigned fold = 1; fold < p; ++fold) {
        std::vector<double> next(n + 1, 0.0);
        for (unsigned i = 0; i <= n; ++i) {
            for (unsigned k = 0; k <= i; ++k) {
                next[i] += Rational::binomial(i, k).to_double() * acc[k] * single[i - k];
            }
        }
        acc = std::move(next);
    }

    const Rational exact = euler_polynomials(p, n)[n].eval(Rational(static_cast<long long>(p), 2));
    return std::abs(acc[n] - exact.to_double()) < tol;
}

}  // namespace eulerpath
