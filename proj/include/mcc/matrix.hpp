#pragma once
// Weight functions of matrix Schubert cells in Hom(C^k, C^n).

#include <string>
#include <string_view>
#include <vector>

#include "mcc/laurent.hpp"
#include "mcc/rational.hpp"

namespace mcc {

/// (k, n, J) with J = {j_1 < ... < j_d}, d <= k <= n. Elements are 1-based.
struct OrbitIndex {
  int k = 0;
  int n = 0;
  std::vector<int> j;

  OrbitIndex() = default;
  OrbitIndex(int k, int n, std::vector<int> j);
  int d() const { return static_cast<int>(j.size()); }
  std::string to_string() const;  // "2,4,{2,3}"
};

/// a1..ak, b1..bn with one block over the alphas.
TablePtr matrix_table(int k, int n);

/// All d-element subsets of {1..n}, each sorted, in lexicographic order.
std::vector<std::vector<int>> k_subsets(int n, int d);

/// prod_{u, v} (1 + y alpha_u / beta_v): lambda_y of T* Hom(C^k, C^n).
LaurentPolynomial ambient_lambda_y(int k, int n);

/// W_{k,n,J} = 1/(k-d)! sum_{S_k} U_{k,n,J}. Throws InexactDivision or
/// NonCancellingDenominator if the result is not a Laurent polynomial.
LaurentPolynomial weight_function_matrix(const OrbitIndex& idx);

struct SumIdentity {
  bool holds = false;
  LaurentPolynomial residual;  // sum of all W minus the ambient lambda_y
};

/// sum over all d and all J of W_{k,n,J} against prod (1 + y alpha_u/beta_v).
SumIdentity orbit_sum_identity(int k, int n);

/// Rebuilds W_{k,n,J} as a sum over the fixed points of the resolution
/// (cosets of S_k / S_{k-d}), with each term assembled from the tangent
/// weights of the resolution, and compares with weight_function_matrix.
bool localization_identity_check(const OrbitIndex& idx);

/// The flag weight function of (I, complement) on Gr_d C^n equals
/// W_{d,n,I}.
bool flag_matrix_bridge(int n, const std::vector<int>& i);

/// Moves an expression onto another table by variable name; every variable
/// of the source must exist in the target.
LaurentPolynomial retable(const LaurentPolynomial& p, const TablePtr& target);
RationalExpression retable(const RationalExpression& p, const TablePtr& target);

}  // namespace mcc
