#include <doctest.h>

#include "mcc/a2.hpp"
#include "mcc/algebra.hpp"
#include "mcc/matrix.hpp"
#include "mcc/serialize.hpp"

using namespace mcc;

TEST_SUITE("a2") {
  TEST_CASE("rank locus validation") {
    CHECK_THROWS(RankLocus(2, 1, 0));
    CHECK_THROWS(RankLocus(2, 2, 3));
    CHECK_THROWS(RankLocus(1, 2, -1));
  }

  TEST_CASE("q-binomials") {
    CHECK(q_binomial(5, 0) == YPoly(1));
    CHECK(q_binomial(2, 1) == YPoly({1, 1}));
    CHECK(q_binomial(4, 2) == YPoly({1, 1, 2, 1, 1}));
    CHECK(q_binomial(3, 4).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
    std::int64_t row[9] = {1};
    for (int a = 0; a <= 8; ++a) {
      for (int r = a; r > 0; --r) row[r] += row[r - 1];
      for (int r = 0; r <= a; ++r) {
        CHECK(q_binomial(a, r).evaluate(1) == row[r]);
        CHECK(q_binomial(a, r) == q_binomial(a, a - r));
      }
    }
  }

  TEST_CASE("q and y conventions") {
    CHECK(q_to_y(YPoly({1, 1})) == YPoly({1, -1}));
    CHECK(q_to_y(q_to_y(YPoly({2, 3, 5}))) == YPoly({2, 3, 5}));
  }

  TEST_CASE("motivic classes of rank loci") {
    const auto t = matrix_table(1, 2);
    CHECK(tau_rank_motivic(RankLocus(1, 2, 1)) == weight_function_matrix(OrbitIndex(1, 2, {})));
    CHECK(tau_rank_motivic(RankLocus(1, 2, 0)) ==
          weight_function_matrix(OrbitIndex(1, 2, {1})) + weight_function_matrix(OrbitIndex(1, 2, {2})));
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= n; ++k) {
        LaurentPolynomial sum(matrix_table(k, n));
        for (int r = 0; r <= k; ++r) sum += tau_rank_motivic(RankLocus(k, n, r));
        CHECK(sum == ambient_lambda_y(k, n));
      }
    }
    (void)t;
  }

  TEST_CASE("Segre classes") {
    CHECK(rat_equal(segre_class(ambient_lambda_y(2, 3), 2, 3), RationalExpression(LaurentPolynomial::constant(
                                                                    matrix_table(2, 3), 1))));
    // Zero locus of a single weight.
    const auto t = matrix_table(1, 1);
    CHECK(rat_equal(segre_class(parse_expression("1-a1/b1", t).as_polynomial(), 1, 1),
                    parse_expression("(1-a1/b1)/(1+y*a1/b1)", t)));
  }

  TEST_CASE("Phi terms") {
    for (int k = 0; k <= 2; ++k) {
      const auto p = phi_resolution(0, k, 2);
      CHECK(rat_equal(p, RationalExpression(LaurentPolynomial::constant(matrix_table(k, 2), 1))));
    }
    CHECK_THROWS(phi_resolution(3, 2, 2));
    // Surviving denominators are only 1 + y a/b factors, each at most once per (u, v).
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= n; ++k) {
        for (int a = 0; a <= k; ++a) {
          const auto p = phi_resolution(a, k, n);
          for (const auto& f : p.factors()) CHECK(f.multiplicity == 1);
          CHECK(p.factors().size() <= static_cast<std::size_t>(k * n));
        }
      }
    }
  }

  TEST_CASE("motivic and sieve expressions agree, r <= k <= n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      for (int k = 1; k <= n; ++k) {
        for (int r = 0; r <= k; ++r) CHECK_MESSAGE(verify_rank_equality(RankLocus(k, n, r)), k, n, r);
      }
    }
  }

  TEST_CASE("sieve matrices") {
    for (int m = 1; m <= 6; ++m) CHECK(sieve_matrix_inverse_check(m));
    CHECK_THROWS(sieve_matrix_inverse_check(0));
  }

  TEST_CASE("supersymmetry") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {1, 3}}) {
      for (int r = 0; r <= k; ++r) CHECK_MESSAGE(supersymmetry_check(RankLocus(k, n, r)), k, n, r);
    }
  }
}
