#include <doctest.h>

#include <limits>

#include "idri/rational.hpp"

using idri::Rational;
using idri::to_decimal;
using idri::to_percent;

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(3, 6).to_string() == "1/2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(1) - Rational(3, 8) == Rational(5, 8));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);

    Rational acc(0);
    for (int i = 0; i < 10; ++i) acc += Rational(1, 10);
    CHECK(acc == Rational(1));
}

TEST_CASE("rational comparison is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(10000000, 30000001) < Rational(1, 3));
    CHECK(Rational(1, 3) <= Rational(2, 6));
}

TEST_CASE("rational overflow is reported, not wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Rational(big) + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(Rational(big, 3) * Rational(5), std::overflow_error);
    CHECK_NOTHROW(Rational(big) * Rational(1, big));
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(to_decimal(Rational(1, 8), 3) == "0.125");
    CHECK(to_decimal(Rational(1, 8), 2) == "0.12");    // 12.5 -> even 12
    CHECK(to_decimal(Rational(27, 200), 2) == "0.14"); // 13.5 -> even 14
    CHECK(to_decimal(Rational(1, 40), 2) == "0.02");   // 2.5 -> even 2
    CHECK(to_decimal(Rational(1, 4), 4) == "0.2500");
    CHECK(to_decimal(Rational(2, 3), 4) == "0.6667");
    CHECK(to_decimal(Rational(5, 8), 0) == "1");
    CHECK(to_decimal(Rational(1, 2), 0) == "0");
    CHECK(to_decimal(Rational(3, 2), 0) == "2");
    CHECK(to_decimal(Rational(0), 2) == "0.00");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.12");
    CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");  // rounds away the sign
    CHECK_THROWS_AS(to_decimal(Rational(1, 2), -1), std::invalid_argument);
    CHECK_THROWS_AS(to_decimal(Rational(1, 2), 19), std::invalid_argument);
}

TEST_CASE("percent rendering") {
    CHECK(to_percent(Rational(5, 8)) == "62.5%");
    CHECK(to_percent(Rational(29, 50)) == "58.0%");
    CHECK(to_percent(Rational(21, 50)) == "42.0%");
    CHECK(to_percent(Rational(1, 3)) == "33.3%");
    CHECK(to_percent(Rational(1)) == "100.0%");
    CHECK(to_percent(Rational(0)) == "0.0%");
}
