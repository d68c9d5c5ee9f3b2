#pragma once

/**
 * @file reference_data.hpp
 * @brief Frozen published values the self-check command verifies against.
 */

#include <cstddef>
#include <vector>

#include "eulerpath/polynomial.hpp"
#include "eulerpath/rational.hpp"

namespace eulerpath::reference {

/// E_n^(p)(x) for 0 <= n <= 4 and 1 <= p <= 3, as published.
inline const XPoly& euler_table_entry(std::size_t n, unsigned p) {
    static const auto make = [](std::initializer_list<Rational> cs) {
        return XPoly(std::vector<Rational>(cs));
    };
    static const std::vector<std::vector<XPoly>> table{
        // p = 1
        {make({Rational(1)}), make({Rational(-1, 2), Rational(1)}),
         make({Rational(0), Rational(-1), Rational(1)}),
         make({Rational(1, 4), Rational(0), Rational(-3, 2), Rational(1)}),
         make({Rational(0), Rational(1), Rational(0), Rational(-2), Rational(1)})},
        // p = 2
        {make({Rational(1)}), make({Rational(-1), Rational(1)}),
         make({Rational(1, 2), Rational(-2), Rational(1)}),
         make({Rational(1, 2), Rational(3, 2), Rational(-3), Rational(1)}),
         make({Rational(-1), Rational(2), Rational(3), Rational(-4), Rational(1)})},
        // p = 3
        {make({Rational(1)}), make({Rational(-3, 2), Rational(1)}),
         make({Rational(3, 2), Rational(-3), Rational(1)}),
         make({Rational(0), Rational(9, 2), Rational(-9, 2), Rational(1)}),
         make({Rational(-3), Rational(0), Rational(9), Rational(-6), Rational(1)})},
    };
    return table.at(p - 1).at(n);
}

/// b_n^(p) for 1 <= n, p <= 5, as published.
inline const Rational& b_table_entry(std::size_t n, unsigned p) {
    static const std::vector<std::vector<Rational>> table{
        {Rational(1, 12), Rational(1, 6), Rational(1, 4), Rational(1, 3), Rational(5, 12)},
        {Rational(4, 15), Rational(13, 30), Rational(3, 5), Rational(23, 30), Rational(14, 15)},
        {Rational(81, 140), Rational(372, 455), Rational(1339, 1260), Rational(2109, 1610),
         Rational(1527, 980)},
        {Rational(64, 63), Rational(3736, 2821), Rational(138688, 84357),
         Rational(668543, 339549), Rational(171830, 74823)},
        {Rational(625, 396), Rational(1245075, 636988), Rational(299594775, 127670972),
         Rational(42601023200LL, 15509529057LL), Rational(3638564965LL, 1154491404LL)},
    };
    return table.at(n - 1).at(p - 1);
}

}  // namespace eulerpath::reference
