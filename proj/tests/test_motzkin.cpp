#include "eulerpath/motzkin.hpp"

#include "eulerpath/series.hpp"
#include "test_util.hpp"

using eulerpath::bernoulli_coeffs;
using eulerpath::bernoulli_motzkin;
using eulerpath::bernoulli_polynomials;
using eulerpath::carlitz_coeffs;
using eulerpath::enumerate_paths;
using eulerpath::euler_coeffs;
using eulerpath::euler_motzkin;
using eulerpath::euler_numbers;
using eulerpath::euler_polynomials;
using eulerpath::jfraction_series;
using eulerpath::LatticePath;
using eulerpath::motzkin_table;
using eulerpath::path_weight;
using eulerpath::Rational;
using eulerpath::specialize_x;
using eulerpath::weighted_sum_check;
using eulerpath::WeightSpec;
using eulerpath::XPoly;
using test_util::q;
using test_util::xp;

TEST_CASE("Motzkin triangle") {
    const auto unit = motzkin_table(WeightSpec::unit(), 4);
    CHECK(unit.at(0, 0) == XPoly(q(1)));
    CHECK(unit.at(3, 1) == XPoly(q(5)));
    CHECK(unit.at(4, 4) == XPoly(q(1)));
    // Classical Motzkin numbers down column 0: 1, 1, 2, 4, 9.
    CHECK(unit.at(2, 0) == XPoly(q(2)));
    CHECK(unit.at(3, 0) == XPoly(q(4)));
    CHECK(unit.at(4, 0) == XPoly(q(9)));

    const auto euler3 = motzkin_table(WeightSpec::euler(3), 2);
    CHECK(euler3.at(2, 0) == xp({q(3, 2), q(-3), q(1)}));

    CHECK_THROWS_AS(unit.at(2, 3), std::out_of_range);
}

TEST_CASE("Euler and Bernoulli columns agree with the generating functions") {
    for (unsigned p = 1; p <= 4; ++p) {
        CHECK(euler_motzkin(p, 12) == euler_polynomials(p, 12));
    }
    CHECK(bernoulli_motzkin(12) == bernoulli_polynomials(1, 12));
    CHECK(bernoulli_motzkin(1) == std::vector<XPoly>{XPoly(q(1)), xp({q(-1, 2), q(1)})});
}

TEST_CASE("path enumeration") {
    const auto trivial = enumerate_paths(0, 0);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].steps.empty());

    const auto paths31 = enumerate_paths(3, 1);
    REQUIRE(paths31.size() == 5);
    // Lexicographic in H < U < D.
    CHECK(paths31[0].steps == "HHU");
    CHECK(paths31[1].steps == "HUH");
    CHECK(paths31[2].steps == "UHH");
    CHECK(paths31[3].steps == "UUD");
    CHECK(paths31[4].steps == "UDU");

    // Dyck paths of length 6: exactly C_3 = 5 with no horizontal step.
    std::size_t dyck = 0;
    for (const auto& path : enumerate_paths(6, 0)) {
        if (!path.has_horizontal()) ++dyck;
    }
    CHECK(dyck == 5);

    // Counts match the unit-weight triangle.
    for (std::size_t n = 0; n <= 10; ++n) {
        const auto table = motzkin_table(WeightSpec::unit(), n);
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(XPoly(Rational(static_cast<long long>(enumerate_paths(n, k).size()))) ==
                  table.at(n, k));
        }
    }
}

TEST_CASE("path weights") {
    CHECK(path_weight(LatticePath{""}, WeightSpec::unit()) == XPoly(q(1)));

    // UUUDDD under the Dyck weights contributes (-1/4)^3 * (3*2*1)^2.
    const auto w = WeightSpec::dyck_euler();
    CHECK(path_weight(LatticePath{"UUUDDD"}, w) == XPoly(q(-36, 64)));

    // The five Dyck paths of length 6 sum to E_6 / 2^6 = -61/64.
    XPoly sum;
    for (const auto& path : enumerate_paths(6, 0)) {
        if (!path.has_horizontal()) sum += path_weight(path, w);
    }
    CHECK(sum == XPoly(q(-61, 64)));
    // The horizontal steps carry sigma = 0, so the restriction is automatic.
    XPoly total;
    for (const auto& path : enumerate_paths(6, 0)) total += path_weight(path, w);
    CHECK(total == XPoly(q(-61, 64)));

    CHECK_THROWS_AS(LatticePath{"UDD"}.heights(), std::invalid_argument);
    CHECK_THROWS_AS(path_weight(LatticePath{"XY"}, w), std::invalid_argument);
}

TEST_CASE("weighted sums reproduce the triangle") {
    CHECK(weighted_sum_check(3, 1, WeightSpec::unit()));
    CHECK(weighted_sum_check(6, 0, WeightSpec::dyck_euler()));
    CHECK(weighted_sum_check(8, 2, WeightSpec::euler(2)));
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(weighted_sum_check(n, k, WeightSpec::euler(1)));
            CHECK(weighted_sum_check(n, k, WeightSpec::euler(2)));
            CHECK(weighted_sum_check(n, k, WeightSpec::euler(3)));
            CHECK(weighted_sum_check(n, k, WeightSpec::bernoulli()));
        }
    }
}

TEST_CASE("J-fraction expansion") {
    // All-zero coefficients give the constant series 1.
    const auto zero = eulerpath::ThreeTermCoeffs([](std::size_t) { return XPoly(); },
                                                 [](std::size_t) { return XPoly(); });
    const auto flat = jfraction_series(zero, 6);
    CHECK(flat[0] == XPoly(q(1)));
    for (std::size_t n = 1; n <= 6; ++n) CHECK(flat[n] == XPoly());

    // Euler coefficients at x = 1/2: moments E_n / 2^n.
    const auto centered = jfraction_series(specialize_x(euler_coeffs(1), q(1, 2)), 8);
    const auto bars = euler_numbers(1, 8);
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(centered[n] == XPoly(bars[n] * Rational::pow2(-static_cast<long>(n))));
    }
    CHECK(centered[2] == XPoly(q(-1, 4)));

    // Full agreement with the generating-function pipeline.
    for (unsigned p = 1; p <= 4; ++p) {
        CHECK(jfraction_series(euler_coeffs(p), 14) == euler_polynomials(p, 14));
    }
    CHECK(jfraction_series(bernoulli_coeffs(), 14) == bernoulli_polynomials(1, 14));
    std::vector<XPoly> bars_as_xpoly;
    for (const auto& value : euler_numbers(1, 14)) bars_as_xpoly.push_back(XPoly(value));
    CHECK(jfraction_series(carlitz_coeffs(), 14) == bars_as_xpoly);
}

TEST_CASE("integer Euler-number weights stay integral with alternating signs") {
    const auto table = motzkin_table(WeightSpec::integer_euler(), 16);
    const auto bars = euler_numbers(1, 16);
    for (std::size_t n = 0; n <= 16; ++n) {
        const XPoly& entry = table.at(n, 0);
        CHECK(entry == XPoly(bars[n]));
        if (n % 2 == 1) {
            CHECK(entry.is_zero());
        } else {
            const Rational value = entry.constant_term();
            CHECK(value.is_integer());
            CHECK(value.sign() == ((n / 2) % 2 ? -1 : 1));
        }
    }
}
