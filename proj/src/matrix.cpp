#include "mcc/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "mcc/algebra.hpp"
#include "mcc/factored.hpp"
#include "mcc/flag.hpp"
#include "mcc/parallel.hpp"
#include "mcc/symmetrize.hpp"

namespace mcc {

namespace {

Monomial ratio(std::size_t num, std::size_t den) {
  Monomial m;
  if (num == den) return m;
  m.set(num, 1);
  m.set(den, -1);
  return m;
}

std::size_t alpha(int u) { return static_cast<std::size_t>(u - 1); }
std::size_t beta(int k, int v) { return static_cast<std::size_t>(k + v - 1); }

// U_{k,n,J} from the psi table.
FactoredProduct matrix_u(const OrbitIndex& idx, const TablePtr& table) {
  FactoredProduct u;
  const auto one = LaurentPolynomial::constant(table, YPoly(1));
  for (int a = 1; a <= idx.k; ++a) {
    for (int v = 1; v <= idx.n; ++v) {
      Side side = Side::below;
      if (a <= idx.d()) {
        const int i = idx.j[static_cast<std::size_t>(a - 1)];
        side = v < i ? Side::below : (v == i ? Side::equal : Side::above);
      }
      u.num.push_back(psi(table, ratio(alpha(a), beta(idx.k, v)), side));
    }
  }
  for (int a = 1; a <= idx.d(); ++a) {
    for (int v = a + 1; v <= idx.k; ++v) {
      const Monomial m = ratio(alpha(v), alpha(a));
      u.num.push_back(psi(table, m, Side::above));
      u.den.push_back(one - LaurentPolynomial::monomial(table, m));
    }
  }
  return u;
}

// The fixed-point term at V_last, read off the local coordinates of the
// resolution: vertical directions, the *-, 0- and bullet-entries.
RationalExpression resolution_term(const OrbitIndex& idx, const TablePtr& table) {
  const auto one = LaurentPolynomial::constant(table, YPoly(1));
  auto mono = [&](std::size_t num, std::size_t den, const YPoly& c) {
    return LaurentPolynomial::monomial(table, ratio(num, den), c);
  };
  const int d = idx.d();
  LaurentPolynomial num = one;
  std::vector<LaurentPolynomial> den;
  for (int u = 1; u <= d; ++u) {
    for (int v = u + 1; v <= idx.k; ++v) {
      num *= one + mono(alpha(v), alpha(u), YPoly::y());
      den.push_back(one - mono(alpha(v), alpha(u), 1));
    }
  }
  for (int u = 1; u <= idx.k; ++u) {
    const int ju = u <= d ? idx.j[static_cast<std::size_t>(u - 1)] : idx.n + 1;
    for (int v = 1; v <= idx.n; ++v) {
      if (v < ju) num *= one - mono(alpha(u), beta(idx.k, v), 1);
      if (u <= d && v == ju) num *= mono(alpha(u), beta(idx.k, v), YPoly{1, 1});
      if (u <= d && v > ju) num *= one + mono(alpha(u), beta(idx.k, v), YPoly::y());
    }
  }
  return RationalExpression(std::move(num), den);
}

}  // namespace

OrbitIndex::OrbitIndex(int k_, int n_, std::vector<int> j_) : k(k_), n(n_), j(std::move(j_)) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("orbit index needs 0 <= k <= n");
  if (d() > k) throw std::invalid_argument("|J| must not exceed k");
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i] < 1 || j[i] > n) throw std::invalid_argument("J element out of range");
    if (i && j[i] <= j[i - 1]) throw std::invalid_argument("J must be strictly increasing");
  }
}

std::string OrbitIndex::to_string() const {
  std::string s = std::to_string(k) + "," + std::to_string(n) + ",{";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + std::to_string(j[i]);
  return s + "}";
}

TablePtr matrix_table(int k, int n) {
  std::vector<std::string> names;
  for (int u = 1; u <= k; ++u) names.push_back("a" + std::to_string(u));
  for (int v = 1; v <= n; ++v) names.push_back("b" + std::to_string(v));
  if (names.size() > kMaxVariables) throw std::invalid_argument("k + n exceeds the variable limit");
  std::vector<Block> blocks;
  if (k > 0) blocks.push_back(Block{"a", 0, static_cast<std::size_t>(k)});
  return make_table(std::move(names), std::move(blocks));
}

std::vector<std::vector<int>> k_subsets(int n, int d) {
  std::vector<std::vector<int>> out;
  if (d < 0 || d > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(d));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - d + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < d; ++t) cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

LaurentPolynomial ambient_lambda_y(int k, int n) {
  const TablePtr table = matrix_table(k, n);
  std::vector<Monomial> weights;
  for (int u = 1; u <= k; ++u) {
    for (int v = 1; v <= n; ++v) weights.push_back(ratio(alpha(u), beta(k, v)));
  }
  return lambda_class(table, weights, LambdaSign::y, false);
}

LaurentPolynomial weight_function_matrix(const OrbitIndex& idx) {
  const TablePtr table = matrix_table(idx.k, idx.n);
  const RationalExpression u = matrix_u(idx, table).expand(table);
  const RationalExpression w = symmetrize(u, table->blocks(), factorial(idx.k - idx.d()));
  return w.as_polynomial();
}

SumIdentity orbit_sum_identity(int k, int n) {
  std::vector<OrbitIndex> all;
  for (int d = 0; d <= k; ++d) {
    for (auto& j : k_subsets(n, d)) all.emplace_back(k, n, std::move(j));
  }
  const TablePtr table = matrix_table(k, n);
  LaurentPolynomial sum = parallel_sum(all.size(), LaurentPolynomial(table),
                                       [&](std::size_t i) { return weight_function_matrix(all[i]); });
  SumIdentity out;
  out.residual = sum - ambient_lambda_y(k, n);
  out.holds = out.residual.is_zero();
  return out;
}

bool localization_identity_check(const OrbitIndex& idx) {
  const TablePtr table = matrix_table(idx.k, idx.n);
  const RationalExpression base = resolution_term(idx, table);
  // One permutation per coset of S_k / S_{k-d}: the images of 1..d are
  // chosen freely, the remaining alphas keep their relative order.
  std::vector<std::vector<std::size_t>> reps;
  std::vector<int> pick(static_cast<std::size_t>(idx.k));
  std::iota(pick.begin(), pick.end(), 1);
  do {
    if (!std::is_sorted(pick.begin() + idx.d(), pick.end())) continue;
    std::vector<std::size_t> perm(table->arity());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (int u = 1; u <= idx.k; ++u) perm[alpha(u)] = alpha(pick[static_cast<std::size_t>(u - 1)]);
    reps.push_back(std::move(perm));
  } while (std::next_permutation(pick.begin(), pick.end()));

  RationalExpression sum(LaurentPolynomial{table});
  for (const auto& perm : reps) sum += base.permuted(perm);
  return rat_equal(sum, RationalExpression(weight_function_matrix(idx)));
}

bool flag_matrix_bridge(int n, const std::vector<int>& i) {
  const int d = static_cast<int>(i.size());
  const FlagShape shape({d, n - d});
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (std::find(i.begin(), i.end(), v) == i.end()) rest.push_back(v);
  }
  const CompositionIndex index(shape, {i, rest});
  const auto wf = weight_function_flag(shape, index);
  const LaurentPolynomial w = weight_function_matrix(OrbitIndex(d, n, i));
  return rat_equal(retable(wf.w, w.table()), RationalExpression(w));
}

namespace {

std::vector<Monomial> rename_images(const TablePtr& from, const TablePtr& to) {
  std::vector<Monomial> images;
  for (const auto& name : from->names()) {
    const int idx = to->index_of(name);
    if (idx < 0) throw TableMismatch("variable " + name + " missing from target table");
    Monomial m;
    m.set(static_cast<std::size_t>(idx), 1);
    images.push_back(m);
  }
  return images;
}

}  // namespace

LaurentPolynomial retable(const LaurentPolynomial& p, const TablePtr& target) {
  return substitute_monomials(p, target, rename_images(p.table(), target));
}

RationalExpression retable(const RationalExpression& p, const TablePtr& target) {
  return p.substituted(target, rename_images(p.table(), target));
}

}  // namespace mcc
