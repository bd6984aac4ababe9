#include <doctest.h>

#include "mcc/algebra.hpp"
#include "mcc/serialize.hpp"
#include "mcc/symmetrize.hpp"

using namespace mcc;

namespace {

LaurentPolynomial P(const std::string& s, const TablePtr& t) { return parse_expression(s, t).as_polynomial(); }

}  // namespace

TEST_SUITE("laurent") {
  TEST_CASE("variable tables") {
    CHECK_THROWS(make_table({"a", "a"}));
    CHECK_THROWS(make_table({"a", "b"}, {Block{"x", 1, 2}}));
    const auto t = make_table({"a", "b", "c"}, {Block{"ab", 0, 2}});
    CHECK(t->index_of("c") == 2);
    CHECK(t->index_of("z") == -1);
    CHECK(t->block("ab").size == 2);
  }

  TEST_CASE("zero is the empty term list") {
    const auto t = make_table({"a"});
    const LaurentPolynomial z(t);
    CHECK(z.is_zero());
    CHECK(z.size() == 0);
    const auto p = P("1+y/a", t);
    CHECK((p - p).is_zero());
    CHECK(p + z == p);
    CHECK(p * LaurentPolynomial::constant(t, 1) == p);
  }

  TEST_CASE("atoms add up") {
    const auto t = make_table({"a"});
    CHECK(P("1-1/a", t) + P("(1+y)/a", t) == P("1+y/a", t));
  }

  TEST_CASE("distributivity on a product of lambda factors") {
    const auto t = make_table({"a", "b"});
    CHECK(P("(1+y/a)*(1+y/b)", t) == P("1+y/a+y/b+y^2/(a*b)", t));
  }

  TEST_CASE("mixing tables is an error") {
    const auto t1 = make_table({"a"});
    const auto t2 = make_table({"b"});
    CHECK_THROWS_AS(P("a", t1) + P("b", t2), TableMismatch);
    CHECK_THROWS_AS(P("a", t1) * P("b", t2), TableMismatch);
    // Structurally identical tables are interchangeable.
    const auto t3 = make_table({"a"});
    CHECK(P("a", t1) + P("a", t3) == P("2*a", t1));
  }

  TEST_CASE("exact_div") {
    const auto t = make_table({"a", "b"});
    const auto r = exact_div(P("(1+y/a)*(1-1/b)", t), P("1+y/a", t));
    REQUIRE(r.has_value());
    CHECK(*r == P("1-1/b", t));
    CHECK_FALSE(exact_div(P("1+y/a", t), P("1-1/a", t)).has_value());
    CHECK(exact_div(LaurentPolynomial(t), P("1+a", t))->is_zero());
    CHECK_THROWS_AS(exact_div(P("a", t), LaurentPolynomial(t)), std::domain_error);
    // Units divide everything.
    CHECK(*exact_div(P("a+b", t), P("-a^2*b", t)) == P("-1/(a*b)-1/a^2", t));
  }

  TEST_CASE("toric substitution") {
    const auto t = make_table({"a1", "a2", "b1"});
    const auto xi = xi_table();
    const std::vector<int> s{1, 1, -1};
    CHECK(toric_substitute(P("a1*a2/b1", t), s, xi) == P("xi^3", xi));
    const auto t2 = make_table({"a", "b"});
    const std::vector<int> s2{1, 1};
    CHECK(toric_substitute(P("1-a/b", t2), s2, xi).is_zero());
    const std::vector<int> s3{1, 0};
    CHECK(toric_substitute(P("(1-1/(a*b))*(1-b^2/a^3)", t2), s3, xi) == P("(1-1/xi)*(1-1/xi^3)", xi));
    CHECK_THROWS(toric_substitute(P("a", t2), s, xi));
  }

  TEST_CASE("lambda classes") {
    const auto t = make_table({"a", "b"});
    const std::vector<Monomial> none;
    CHECK(lambda_class(t, none, LambdaSign::y, true) == LaurentPolynomial::constant(t, 1));
    std::vector<Monomial> w(2);
    w[0].set(0, 1);
    w[0].set(1, 1);
    w[1].set(0, 3);
    w[1].set(1, -2);
    CHECK(lambda_class(t, w, LambdaSign::y, true) == P("(1+y/(a*b))*(1+y*b^2/a^3)", t));
    CHECK(lambda_class(t, w, LambdaSign::minus_one, false) == P("(1-a*b)*(1-a^3/b^2)", t));
  }

  TEST_CASE("substitution and permutation are ring maps") {
    const auto t = make_table({"a", "b", "c"});
    const std::vector<std::size_t> perm{2, 0, 1};
    const auto p = P("(1+y*a/b)*(1-c)", t);
    CHECK(permute_variables(p, perm) == P("(1+y*c/a)*(1-b)", t));
    const auto target = make_table({"u", "v"});
    std::vector<Monomial> images(3);
    images[0].set(0, 1);
    images[1].set(0, 1);
    images[2].set(1, -1);
    CHECK(substitute_monomials(p, target, images) == P("(1+y)*(1-1/v)", target));
  }

  TEST_CASE("symmetrize") {
    const auto t = make_table({"a1", "a2", "b1"}, {Block{"a", 0, 2}});
    CHECK(rat_equal(symmetrize(RationalExpression(P("a1", t)), t->blocks()), RationalExpression(P("a1+a2", t))));
    // A trivial group leaves the input alone.
    const auto t1 = make_table({"a1", "b1", "b2"}, {Block{"a", 0, 1}});
    const auto u = parse_expression("(1+y)*a1/b1*(1+y*a1/b2)", t1);
    CHECK(rat_equal(symmetrize(u, t1->blocks()), u));
    CHECK(block_permutations(5, {Block{"x", 0, 3}, Block{"y", 3, 2}}).size() == 12);
    CHECK(factorial(5) == 120);
  }

  TEST_CASE("symmetrize divides exactly or throws") {
    const auto t = make_table({"a1", "a2"}, {Block{"a", 0, 2}});
    const RationalExpression u(P("a1*a2", t));
    CHECK(rat_equal(symmetrize(u, t->blocks(), 2), u));
    CHECK_THROWS_AS(symmetrize(RationalExpression(P("a1", t)), t->blocks(), 2), InexactDivision);
  }

  TEST_CASE("symmetrize clears the Vandermonde-type denominator") {
    const auto t = make_table({"a1", "a2", "b1"}, {Block{"a", 0, 2}});
    const auto u = parse_expression("(1+y*a2/a1)*(1-a2/b1)/(1-a2/a1)", t);
    const auto w = symmetrize(u, t->blocks());
    CHECK(w.is_polynomial());
  }
}
