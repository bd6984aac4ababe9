#include <doctest.h>

#include "mcc/rational.hpp"
#include "mcc/serialize.hpp"

using namespace mcc;

namespace {

RationalExpression R(const std::string& s, const TablePtr& t) { return parse_expression(s, t); }

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("rat_equal cross-multiplies") {
    const auto t = make_table({"a", "b"});
    CHECK(rat_equal(R("(1-1/a)/(1-1/a)", t), R("1", t)));
    CHECK_FALSE(rat_equal(R("(1+y)/a", t), R("1+y/a", t)));
    CHECK(rat_equal(R("(1-a)/(1-a^2)", t), R("1/(1+a)", t)));
    CHECK(rat_equal(R("1/(1-a)", t), R("-1/(a*(1-1/a))", t)));
  }

  TEST_CASE("factors are normalized and units move to the numerator") {
    const auto t = make_table({"a"});
    const auto r = R("1/(a-a^2)", t);
    REQUIRE(r.factors().size() == 1);
    CHECK(r.factors()[0].poly == R("1-a", t).numerator());
    CHECK(r.numerator() == R("1/a", t).numerator());
    const auto [unit, rest] = normalize_factor(R("-2*a^3+2*a^2", t).numerator());
    CHECK(rest == R("1-a", t).numerator() * LaurentPolynomial::constant(t, 2));
    CHECK(unit == R("a^2", t).numerator());
  }

  TEST_CASE("sum keeps the lcm of the denominators") {
    const auto t = make_table({"a", "b"});
    const auto s = R("1/(1-a)", t) + R("1/((1-a)*(1-b))", t);
    CHECK(s.denominator_factors().size() == 2);
    CHECK(rat_equal(s, R("(2-b)/((1-a)*(1-b))", t)));
  }

  TEST_CASE("cancelled removes dividing factors") {
    const auto t = make_table({"a"});
    const auto r = RationalExpression(R("1-a^2", t).numerator(), {R("1-a", t).numerator()});
    const auto c = r.cancelled();
    CHECK(c.is_polynomial());
    CHECK(c.as_polynomial() == R("1+a", t).numerator());
    CHECK_THROWS_AS(R("1/(1-a)", t).as_polynomial(), NonCancellingDenominator);
  }

  TEST_CASE("zero denominators are rejected") {
    const auto t = make_table({"a"});
    CHECK_THROWS(RationalExpression(R("1", t).numerator(), {LaurentPolynomial(t)}));
    CHECK_THROWS(R("1/(a-a)", t));
  }

  TEST_CASE("substitution into a vanishing factor throws") {
    const auto t = make_table({"a", "b"});
    const auto target = make_table({"t"});
    std::vector<Monomial> images(2);
    images[0].set(0, 1);
    images[1].set(0, 1);
    CHECK_THROWS_AS(R("1/(1-a/b)", t).substituted(target, images), std::domain_error);
    CHECK(rat_equal(R("(1+y*a)/(1-a*b)", t).substituted(target, images), R("(1+y*t)/(1-t^2)", target)));
  }

  TEST_CASE("products and scaling") {
    const auto t = make_table({"a"});
    CHECK(rat_equal(R("1/(1-a)", t) * R("(1-a)/(1+y*a)", t), R("1/(1+y*a)", t)));
    CHECK(rat_equal(R("a/(1-a)", t).scaled(YPoly({1, 1})), R("(1+y)*a/(1-a)", t)));
    CHECK(rat_equal(-R("a/(1-a)", t), R("a/(a-1)", t)));
  }
}
