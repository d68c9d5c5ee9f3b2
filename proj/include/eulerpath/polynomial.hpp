#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over an arbitrary commutative ring.
 *
 * The two instantiations used throughout the library form a tower:
 *
 *   XPoly = Polynomial<Rational>   polynomials in x over the rationals
 *   YPoly = Polynomial<XPoly>      polynomials in y with XPoly coefficients
 *
 * Coefficients are stored ascending by power, canonically: trailing zeros
 * are stripped and the zero polynomial is the empty list (its degree is
 * "none", never -1). Values are immutable in practice; all operations
 * return fresh polynomials.
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulerpath/rational.hpp"

namespace eulerpath {

template <class T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long n) { return Rational(n); }
};

template <class C>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(C constant) {  // NOLINT: implicit embedding of scalars
        coeffs_.push_back(std::move(constant));
        normalize();
    }
    explicit Polynomial(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static Polynomial from_coeffs(std::initializer_list<C> ascending) {
        return Polynomial(std::vector<C>(ascending));
    }
    static Polynomial variable() {
        return Polynomial(std::vector<C>{ring_traits<C>::zero(), ring_traits<C>::one()});
    }
    static Polynomial monomial(C coeff, std::size_t power) {
        std::vector<C> cs(power + 1, ring_traits<C>::zero());
        cs[power] = std::move(coeff);
        return Polynomial(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<C>& coefficients() const { return coeffs_; }

    C coeff(std::size_t i) const {
        if (i >= coeffs_.size()) return ring_traits<C>::zero();
        return coeffs_[i];
    }

    C constant_term() const { return coeff(0); }

    const C& leading() const {
        if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    bool is_monic_of_degree(std::size_t n) const {
        return degree() == n && leading() == ring_traits<C>::one();
    }

    /// Multiplies by variable^k (coefficient shift).
    Polynomial times_variable_pow(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<C> cs(coeffs_.size() + k, ring_traits<C>::zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i + k] = coeffs_[i];
        return Polynomial(std::move(cs));
    }

    /// Horner evaluation at a point of any ring V constructible from C.
    template <class V>
    V eval(const V& point) const {
        V acc{};
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * point + V(coeffs_[i]);
        }
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<C> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), ring_traits<C>::zero());
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<C> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), ring_traits<C>::zero());
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) - b.coeff(i);
        return Polynomial(std::move(cs));
    }

    Polynomial operator-() const {
        std::vector<C> cs(coeffs_.size(), ring_traits<C>::zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = -coeffs_[i];
        return Polynomial(std::move(cs));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> cs(a.coeffs_.size() + b.coeffs_.size() - 1, ring_traits<C>::zero());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                cs[i + j] = cs[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(cs));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == ring_traits<C>::zero()) coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
};

template <class C>
struct ring_traits<Polynomial<C>> {
    static Polynomial<C> zero() { return {}; }
    static Polynomial<C> one() { return Polynomial<C>(ring_traits<C>::one()); }
    static Polynomial<C> from_int(long long n) { return Polynomial<C>(ring_traits<C>::from_int(n)); }
};

using XPoly = Polynomial<Rational>;
using YPoly = Polynomial<XPoly>;

/// (base)_k = base (base+1) ... (base+k-1); the empty product for k = 0.
template <class T>
T rising_factorial(const T& base, unsigned k) {
    T acc = ring_traits<T>::one();
    for (unsigned j = 0; j < k; ++j) acc = acc * (base + ring_traits<T>::from_int(j));
    return acc;
}

}  // namespace eulerpath
