#include <doctest.h>

#include <limits>

#include "mcc/ypoly.hpp"

using namespace mcc;

TEST_SUITE("ypoly") {
  TEST_CASE("construction trims leading zeros") {
    CHECK(YPoly({1, 2, 0, 0}).degree() == 1);
    CHECK(YPoly(0).is_zero());
    CHECK(YPoly{}.degree() == -1);
  }

  TEST_CASE("ring operations") {
    const YPoly a{1, 1};   // 1+y
    const YPoly b{-1, 1};  // -1+y
    CHECK(a * b == YPoly({-1, 0, 1}));
    CHECK(a + b == YPoly({0, 2}));
    CHECK((a - a).is_zero());
    CHECK(YPoly::power(3) == YPoly({0, 0, 0, 1}));
  }

  TEST_CASE("reflect is y -> -y and an involution") {
    const YPoly p{1, 2, 3};
    CHECK(p.reflect() == YPoly({1, -2, 3}));
    CHECK(p.reflect().reflect() == p);
  }

  TEST_CASE("exact division") {
    const YPoly a{1, 1};
    const YPoly b{-1, 0, 1};
    REQUIRE(b.exact_div(a).has_value());
    CHECK(*b.exact_div(a) == YPoly({-1, 1}));
    CHECK_FALSE(YPoly({1, 0, 1}).exact_div(a).has_value());
    CHECK_FALSE(YPoly(3).exact_div(YPoly(2)).has_value());
    CHECK_THROWS(a.exact_div(YPoly{}));
  }

  TEST_CASE("printing") {
    CHECK(YPoly({1, 1}).to_string() == "1+y");
    CHECK(YPoly({-1, 0, 1}).to_string() == "-1+y^2");
    CHECK(YPoly({0, 2}).to_string() == "2*y");
    CHECK(YPoly{}.to_string() == "0");
    CHECK(YPoly({1, 1}).to_string("q") == "1+q");
  }

  TEST_CASE("overflow is an error, not a wrap") {
    const YPoly big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + YPoly(1), ArithmeticOverflow);
    CHECK_THROWS_AS(big * YPoly(2), ArithmeticOverflow);
  }
}
