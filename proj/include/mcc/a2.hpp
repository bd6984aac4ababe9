#pragma once
// Rank loci in Hom(C^k, C^n): the motivic expression (sum of matrix weight
// functions) and the sieve expression, with q = -y.

#include <map>
#include <mutex>
#include <utility>

#include "mcc/rational.hpp"

namespace mcc {

/// Sigma^r_{k,n}: maps with an r-dimensional kernel, 0 <= r <= k <= n.
struct RankLocus {
  int k = 0;
  int n = 0;
  int r = 0;

  RankLocus(int k, int n, int r);
};

/// Gaussian binomials as polynomials in q, memoized. Thread-safe.
class QBinomialTable {
 public:
  /// binom(a, r)_q; zero outside 0 <= r <= a.
  YPoly get(int a, int r);

 private:
  std::mutex mu_;
  std::map<std::pair<int, int>, YPoly> memo_;
};

/// binom(a, r)_q from a shared table (coefficients in q).
YPoly q_binomial(int a, int r);

/// p(q) -> p(-y), and back (the map is an involution).
YPoly q_to_y(const YPoly& p);

/// sum_{|J| = k - r} W_{k,n,J} over matrix_table(k, n).
LaurentPolynomial tau_rank_motivic(const RankLocus& loc);

/// tau / prod_{u,v} (1 + y alpha_u/beta_v), the factors kept unexpanded.
RationalExpression segre_class(const LaurentPolynomial& tau, int k, int n);

/// Phi^a_{k,n}: the fixed-point sum over a-subsets I of {1..k}. Throws
/// NonCancellingDenominator if any alpha-alpha factor survives the sum.
RationalExpression phi_resolution(int a, int k, int n);

/// sum_{a=r}^{k} (-1)^{a-r} q^{(a-r)(a-r-1)/2} binom(a, r)_q Phi^a_{k,n}.
RationalExpression segre_sieve(const RankLocus& loc);

/// The motivic and sieve expressions agree exactly.
bool verify_rank_equality(const RankLocus& loc);

/// The lower-triangular matrices [binom(a, r)_q] and
/// [(-1)^{a-r} q^{(a-r)(a-r-1)/2} binom(a, r)_q], 1 <= a, r <= kmax, are
/// inverse to each other in both orders.
bool sieve_matrix_inverse_check(int kmax);

/// segre_sieve(k, n, r) at alpha_k = beta_n = t equals segre_sieve(k-1, n-1, r)
/// (zero when r = k).
bool supersymmetry_check(const RankLocus& loc);

}  // namespace mcc
