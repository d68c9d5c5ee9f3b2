#include "eulerpath/bernoulli_lab.hpp"

#include "test_util.hpp"

using eulerpath::a_check;
using eulerpath::b_table;
using eulerpath::b_table_at;
using eulerpath::bernoulli_coeffs;
using eulerpath::BTable;
using eulerpath::conjecture_check;
using eulerpath::conjecture_eval;
using eulerpath::conjecture_eval_alt;
using eulerpath::Rational;
using test_util::q;

namespace {

/// The published 5 x 5 coefficient table, row-major by n.
const std::vector<std::vector<Rational>>& published_table() {
    static const std::vector<std::vector<Rational>> table{
        {q(1, 12), q(1, 6), q(1, 4), q(1, 3), q(5, 12)},
        {q(4, 15), q(13, 30), q(3, 5), q(23, 30), q(14, 15)},
        {q(81, 140), q(372, 455), q(1339, 1260), q(2109, 1610), q(1527, 980)},
        {q(64, 63), q(3736, 2821), q(138688, 84357), q(668543, 339549), q(171830, 74823)},
        {q(625, 396), q(1245075, 636988), q(299594775, 127670972), q(42601023200, 15509529057),
         q(3638564965, 1154491404)},
    };
    return table;
}

}  // namespace

TEST_CASE("computed table matches the published values") {
    const BTable table = b_table(5, 5);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t p = 1; p <= 5; ++p) {
            INFO("n=" << n << " p=" << p);
            CHECK(table.at(n, p) == published_table()[n - 1][p - 1]);
        }
    }
}

TEST_CASE("table entries do not depend on the evaluation point") {
    const BTable at_zero = b_table_at(5, 8, q(0));
    const BTable at_half = b_table_at(5, 8, q(1, 2));
    CHECK(at_zero == at_half);
    // b_table itself recomputes at x = 0 and x = p/2 and asserts equality.
    CHECK_NOTHROW(b_table(3, 8));
}

TEST_CASE("column p = 1 is the negated Bernoulli recurrence coefficient") {
    const BTable table = b_table(5, 1);
    const auto coeffs = bernoulli_coeffs();
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(eulerpath::XPoly(table.at(n, 1)) == -coeffs.t(n));
    }
}

TEST_CASE("closed-form rows") {
    CHECK(conjecture_eval(1, 12) == q(1));
    CHECK(conjecture_eval(2, 7) == q(19, 15));
    CHECK(conjecture_eval(3, 5) == q(1527, 980));
    CHECK(conjecture_eval(4, 1) == q(64, 63));
    CHECK(conjecture_eval(5, 1) == q(625, 396));
    for (unsigned p = 1; p <= 5; ++p) {
        for (unsigned row = 1; row <= 5; ++row) {
            CHECK(conjecture_eval(row, p) == published_table()[row - 1][p - 1]);
        }
    }
    CHECK_THROWS_AS(conjecture_eval(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_eval(0, 1), std::invalid_argument);
}

TEST_CASE("alternate printed forms of rows 2 and 3 disagree with the data") {
    CHECK(conjecture_eval_alt(2, 1) == q(4, 5));        // vs 4/15
    CHECK(conjecture_eval_alt(3, 1) == q(162, 175));    // 648/700 vs 81/140
    CHECK(conjecture_eval_alt(2, 1) != conjecture_eval(2, 1));
    CHECK(conjecture_eval_alt(3, 1) != conjecture_eval(3, 1));
    CHECK_THROWS_AS(conjecture_eval_alt(4, 1), std::invalid_argument);
}

TEST_CASE("conjecture check to p = 12") {
    const auto report = conjecture_check(12);
    REQUIRE(report.size() == 5 * 12);
    for (const auto& cell : report) {
        INFO("row=" << cell.row << " p=" << cell.p << " computed=" << cell.computed.str());
        CHECK(cell.match);
        if (cell.row == 2 || cell.row == 3) {
            REQUIRE(cell.alt_form.has_value());
            CHECK_FALSE(cell.alt_match);
        } else {
            CHECK_FALSE(cell.alt_form.has_value());
        }
    }
}

TEST_CASE("row laws hold through p = 12") {
    const BTable table = b_table(2, 12);
    for (unsigned p = 1; p <= 12; ++p) {
        CHECK(table.at(1, p) == Rational(p, 12));
        CHECK(table.at(2, p) == Rational(5 * static_cast<long long>(p) + 3, 30));
    }
}

TEST_CASE("diagonal recurrence coefficient is x - p/2") {
    CHECK(a_check(1, 4));
    CHECK(a_check(2, 6));
    CHECK(a_check(3, 4));
}

TEST_CASE("serialization") {
    const BTable table = b_table(1, 1);
    CHECK(table.to_csv() == "n,p=1\n1,1/12\n");
    const std::string latex = table.to_latex();
    CHECK(latex.find("\\frac{1}{12}") != std::string::npos);
    CHECK(latex.find("$p=1$") != std::string::npos);
}
