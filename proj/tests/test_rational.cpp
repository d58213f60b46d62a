#include <doctest.h>

#include "amdkit/rational.hpp"

using amdkit::Rational;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), amdkit::error);
}

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), amdkit::error);

    Rational sum;
    for (int i = 0; i < 72; ++i) sum += Rational(65, 72 * 72);
    CHECK(sum == Rational(65, 72));
}

TEST_CASE("ordering is exact") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5, 24) < Rational(1, 4));
    CHECK(Rational(7, 8) >= Rational(7, 8));
    CHECK(Rational(1000000007, 1000000009) < Rational(1));
}

TEST_CASE("squared comparison avoids materializing the square") {
    // (1/3)^2 vs 1/9
    CHECK(Rational(1, 3).compare_squared_to(Rational(1, 9)) == 0);
    CHECK(Rational(1, 2).compare_squared_to(Rational(1, 9)) > 0);
    CHECK(Rational(1, 4).compare_squared_to(Rational(1, 9)) < 0);
    // Large reduced terms that would overflow if squared naively.
    Rational big(1999999973, 1999999943);
    CHECK(big.compare_squared_to(Rational(1)) > 0);
    Rational wide(4000000000000000037, 4000000000000000063);
    CHECK(wide.compare_squared_to(Rational(1)) < 0);
}

TEST_CASE("overflow is loud, never silent") {
    Rational huge(std::int64_t{1} << 62);
    CHECK_THROWS_AS(huge * huge, amdkit::error);
}

TEST_CASE("string round trip") {
    CHECK(Rational(1, 5).str() == "1/5");
    CHECK(Rational(65, 72).str() == "65/72");
    CHECK(Rational(1).str() == "1/1");
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational::parse("5/24") == Rational(5, 24));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-2/4") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("a/b"), amdkit::error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), amdkit::error);
}
