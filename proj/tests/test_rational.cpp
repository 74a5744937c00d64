#include "negtype/rational.hpp"

#include <doctest.h>

using namespace negtype;

TEST_CASE("parse_rational handles fractions, integers and decimals") {
    CHECK(*parse_rational("5/28") == Rational(5, 28));
    CHECK(*parse_rational("-3/7") == Rational(-3, 7));
    CHECK(*parse_rational("42") == Rational(42));
    CHECK(*parse_rational("0.3") == Rational(3, 10));
    CHECK(*parse_rational("-0.25") == Rational(-1, 4));
    CHECK(*parse_rational("2e-3") == Rational(1, 500));
    CHECK(*parse_rational("1.5e2") == Rational(150));
    CHECK_FALSE(parse_rational("").has_value());
    CHECK_FALSE(parse_rational("abc").has_value());
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("1/ 2").has_value());
}

TEST_CASE("fraction formatting") {
    CHECK(to_fraction_string(Rational(5, 43)) == "5/43");
    CHECK(to_fraction_string(Rational(7)) == "7");
    CHECK(to_fraction_string(Rational(-1, 3)) == "-1/3");
}

TEST_CASE("pow_rational with negative exponents") {
    CHECK(pow_rational(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow_rational(Rational(2, 3), 0) == Rational(1));
    CHECK(pow_rational(Rational(2), -2) == Rational(1, 4));
}

TEST_CASE("nth_root_exact finds exact roots only") {
    CHECK(*nth_root_exact(Rational(9, 4), 2) == Rational(3, 2));
    CHECK(*nth_root_exact(Rational(27), 3) == Rational(3));
    CHECK(*nth_root_exact(Rational(1), 5) == Rational(1));
    CHECK(*nth_root_exact(Rational(0), 2) == Rational(0));
    CHECK_FALSE(nth_root_exact(Rational(2), 2).has_value());
    CHECK_FALSE(nth_root_exact(Rational(8, 3), 3).has_value());
    CHECK_FALSE(nth_root_exact(Rational(-4), 2).has_value());
    // round trip on a larger value
    Rational big = pow_rational(Rational(123456789, 1024), 3);
    CHECK(*nth_root_exact(big, 3) == Rational(123456789, 1024));
}

TEST_CASE("solve_linear_exact") {
    // 2x + y = 5, x - y = 1  ->  x = 2, y = 1
    auto sol = solve_linear_exact(2, {Rational(2), Rational(1), Rational(1), Rational(-1)},
                                  {Rational(5), Rational(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(2));
    CHECK((*sol)[1] == Rational(1));

    // singular system
    auto bad = solve_linear_exact(2, {Rational(1), Rational(2), Rational(2), Rational(4)},
                                  {Rational(1), Rational(2)});
    CHECK_FALSE(bad.has_value());

    // needs a row swap
    auto swapped = solve_linear_exact(2, {Rational(0), Rational(1), Rational(1), Rational(0)},
                                      {Rational(3), Rational(4)});
    REQUIRE(swapped.has_value());
    CHECK((*swapped)[0] == Rational(4));
    CHECK((*swapped)[1] == Rational(3));
}
