#include "eulerpath/series.hpp"

#include "test_util.hpp"

using eulerpath::bernoulli_polynomials;
using eulerpath::binomial_convolve;
using eulerpath::euler_numbers;
using eulerpath::euler_polynomials;
using eulerpath::Rational;
using eulerpath::RationalSeries;
using eulerpath::Series;
using eulerpath::XPoly;
using test_util::q;
using test_util::xp;

namespace {

Series geometric_like(std::initializer_list<Rational> ascending, std::size_t order) {
    Series s(order);
    std::size_t i = 0;
    for (const auto& c : ascending) s.set_coeff(i++, XPoly(c));
    return s;
}

}  // namespace

TEST_CASE("series multiplication truncates at the order") {
    // (1 + z)(1 - z) = 1 - z^2 at order 2.
    const Series a = geometric_like({q(1), q(1)}, 2);
    const Series b = geometric_like({q(1), q(-1)}, 2);
    const Series ab = a * b;
    CHECK(ab.coeff(0) == XPoly(q(1)));
    CHECK(ab.coeff(1) == XPoly());
    CHECK(ab.coeff(2) == XPoly(q(-1)));

    // exp(z) * exp(-z) = 1 at order 6.
    Series e(6), einv(6);
    for (std::size_t n = 0; n <= 6; ++n) {
        const Rational inv_fact = Rational(1) / Rational::factorial(n);
        e.set_coeff(n, XPoly(inv_fact));
        einv.set_coeff(n, XPoly(n % 2 ? -inv_fact : inv_fact));
    }
    const Series prod = e * einv;
    CHECK(prod.coeff(0) == XPoly(q(1)));
    for (std::size_t n = 1; n <= 6; ++n) CHECK(prod.coeff(n) == XPoly());

    CHECK_THROWS_AS(Series(2) * Series(3), std::invalid_argument);
}

TEST_CASE("series inversion") {
    // Constant 2 inverts to 1/2.
    const Series two = Series::constant(XPoly(q(2)), 3);
    CHECK(two.inverse().coeff(0) == XPoly(q(1, 2)));

    // 1/(1 + z) = 1 - z + z^2 - z^3.
    const Series one_plus_z = geometric_like({q(1), q(1)}, 3);
    const Series inv = one_plus_z.inverse();
    for (std::size_t n = 0; n <= 3; ++n) CHECK(inv.coeff(n) == XPoly(n % 2 ? q(-1) : q(1)));

    // Inverse times the original is 1 (oracle for (2/(e^z+1)) handling).
    const Series half = eulerpath::detail::half_exp_plus_half(8);
    const Series round_trip = half.inverse() * half;
    CHECK(round_trip.coeff(0) == XPoly(q(1)));
    for (std::size_t n = 1; n <= 8; ++n) CHECK(round_trip.coeff(n) == XPoly());

    CHECK_THROWS_AS(Series(3).inverse(), std::domain_error);
    Series bad = Series::constant(XPoly::variable(), 3);
    CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}

TEST_CASE("Euler polynomials match the published table") {
    const auto p1 = euler_polynomials(1, 4);
    CHECK(p1[0] == XPoly(q(1)));
    CHECK(p1[1] == xp({q(-1, 2), q(1)}));
    CHECK(p1[2] == xp({q(0), q(-1), q(1)}));
    CHECK(p1[3] == xp({q(1, 4), q(0), q(-3, 2), q(1)}));
    CHECK(p1[4] == xp({q(0), q(1), q(0), q(-2), q(1)}));

    const auto p3 = euler_polynomials(3, 2);
    CHECK(p3[2] == xp({q(3, 2), q(-3), q(1)}));
}

TEST_CASE("order-2 Euler polynomials against the binomial-convolution oracle") {
    // E_n^(2)(x) = sum_k C(n,k) E_k(0) E_{n-k}(x).
    const auto base = euler_polynomials(1, 5);
    std::vector<XPoly> at_zero;
    for (const auto& e : base) at_zero.push_back(XPoly(e.eval(q(0))));
    const auto convolved = binomial_convolve(at_zero, base);
    const auto direct = euler_polynomials(2, 5);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(convolved[n] == direct[n]);
}

TEST_CASE("Bernoulli polynomials") {
    const auto p1 = bernoulli_polynomials(1, 4);
    CHECK(p1[0] == XPoly(q(1)));
    CHECK(p1[1] == xp({q(-1, 2), q(1)}));
    CHECK(p1[2] == xp({q(1, 6), q(-1), q(1)}));
    CHECK(p1[4] == xp({q(-1, 30), q(0), q(1), q(-2), q(1)}));

    // Order 2 via self-convolution of the order-1 values at 0.
    const auto base = bernoulli_polynomials(1, 4);
    std::vector<XPoly> at_zero;
    for (const auto& b : base) at_zero.push_back(XPoly(b.eval(q(0))));
    const auto convolved = binomial_convolve(at_zero, base);
    const auto direct = bernoulli_polynomials(2, 4);
    for (std::size_t n = 0; n <= 4; ++n) CHECK(convolved[n] == direct[n]);
}

TEST_CASE("generalized Euler numbers") {
    const auto e1 = euler_numbers(1, 6);
    const std::vector<Rational> expected{q(1), q(0), q(-1), q(0), q(5), q(0), q(-61)};
    CHECK(e1 == expected);

    // 2^n E_n^(p)(p/2) cross-law.
    for (unsigned p = 1; p <= 5; ++p) {
        const auto bars = euler_numbers(p, 16);
        const auto polys = euler_polynomials(p, 16);
        for (std::size_t n = 0; n <= 16; ++n) {
            CHECK(bars[n] == Rational::pow2(static_cast<long>(n)) *
                                 polys[n].eval(Rational(static_cast<long long>(p), 2)));
        }
    }
}

TEST_CASE("binomial convolution") {
    // Delta sequence is the identity.
    std::vector<Rational> delta{q(1), q(0), q(0), q(0), q(0), q(0), q(0), q(0)};
    const auto e2 = euler_numbers(2, 7);
    CHECK(binomial_convolve(delta, e2) == e2);

    // sech * sech = sech^2 moment-wise.
    const auto e1 = euler_numbers(1, 7);
    CHECK(binomial_convolve(e1, e1) == e2);

    // Additivity in the order for every split with p1 + p2 <= 5.
    for (unsigned p1 = 1; p1 <= 4; ++p1) {
        for (unsigned p2 = 1; p1 + p2 <= 5; ++p2) {
            CHECK(binomial_convolve(euler_numbers(p1, 10), euler_numbers(p2, 10)) ==
                  euler_numbers(p1 + p2, 10));
        }
    }

    CHECK_THROWS_AS(binomial_convolve(std::vector<Rational>{q(1)}, e2), std::invalid_argument);
}

TEST_CASE("structural properties of the moment sequences") {
    for (unsigned p = 1; p <= 5; ++p) {
        const auto polys = euler_polynomials(p, 16);
        for (std::size_t n = 0; n <= 16; ++n) CHECK(polys[n].is_monic_of_degree(n));
        // E_1^(p) = x - p/2.
        CHECK(polys[1] == XPoly::variable() - XPoly(Rational(p, 2)));
    }
    // Odd entries vanish, even entries alternate in sign.
    const auto bars = euler_numbers(1, 16);
    for (std::size_t k = 0; k <= 8; ++k) {
        if (2 * k + 1 <= 16) CHECK(bars[2 * k + 1] == q(0));
        CHECK(bars[2 * k].sign() == (k % 2 ? -1 : 1));
    }
}
