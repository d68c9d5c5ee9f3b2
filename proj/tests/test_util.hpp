#pragma once

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "eulerpath/format.hpp"
#include "eulerpath/polynomial.hpp"
#include "eulerpath/rational.hpp"

namespace Catch {

template <>
struct StringMaker<eulerpath::Rational> {
    static std::string convert(const eulerpath::Rational& r) { return r.str(); }
};

template <>
struct StringMaker<eulerpath::XPoly> {
    static std::string convert(const eulerpath::XPoly& p) { return eulerpath::to_string(p); }
};

template <>
struct StringMaker<eulerpath::YPoly> {
    static std::string convert(const eulerpath::YPoly& p) { return eulerpath::to_string(p); }
};

}  // namespace Catch

namespace test_util {

inline eulerpath::XPoly xp(std::initializer_list<eulerpath::Rational> ascending) {
    return eulerpath::XPoly(std::vector<eulerpath::Rational>(ascending));
}

inline eulerpath::YPoly yp(std::initializer_list<eulerpath::XPoly> ascending) {
    return eulerpath::YPoly(std::vector<eulerpath::XPoly>(ascending));
}

inline eulerpath::Rational q(long long num, long long den = 1) {
    return eulerpath::Rational(num, den);
}

/// Deterministic generators for the hand-rolled property tests.
struct Gen {
    std::mt19937 rng;

    explicit Gen(unsigned seed) : rng(seed) {}

    eulerpath::Rational rational() {
        std::uniform_int_distribution<long long> num(-9, 9);
        std::uniform_int_distribution<long long> den(1, 9);
        return eulerpath::Rational(num(rng), den(rng));
    }

    eulerpath::Rational nonzero_rational() {
        for (;;) {
            auto r = rational();
            if (!r.is_zero()) return r;
        }
    }

    eulerpath::XPoly xpoly(std::size_t max_degree = 3) {
        std::uniform_int_distribution<std::size_t> deg(0, max_degree);
        std::vector<eulerpath::Rational> cs(deg(rng) + 1);
        for (auto& c : cs) c = rational();
        return eulerpath::XPoly(std::move(cs));
    }

    eulerpath::XPoly nonzero_xpoly(std::size_t max_degree = 3) {
        for (;;) {
            auto p = xpoly(max_degree);
            if (!p.is_zero()) return p;
        }
    }
};

}  // namespace test_util
