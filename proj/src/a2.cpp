#include "mcc/a2.hpp"

#include <algorithm>

#include "mcc/algebra.hpp"
#include "mcc/matrix.hpp"
#include "mcc/parallel.hpp"

namespace mcc {

namespace {

Monomial ratio(std::size_t num, std::size_t den) {
  Monomial m;
  m.set(num, 1);
  m.set(den, -1);
  return m;
}

// (-1)^{e} q^{e(e-1)/2} as a y-polynomial.
YPoly sieve_sign(int e) {
  const YPoly q{0, -1};
  YPoly c = e % 2 ? YPoly(-1) : YPoly(1);
  for (int i = 0; i < e * (e - 1) / 2; ++i) c = c * q;
  return c;
}

using QMatrix = std::vector<std::vector<YPoly>>;

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  const std::size_t m = a.size();
  QMatrix c(m, std::vector<YPoly>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < m; ++l) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

bool is_identity(const QMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!(a[i][j] == YPoly(i == j ? 1 : 0))) return false;
    }
  }
  return true;
}

}  // namespace

RankLocus::RankLocus(int k_, int n_, int r_) : k(k_), n(n_), r(r_) {
  if (r < 0 || r > k || k > n) throw std::invalid_argument("rank locus needs 0 <= r <= k <= n");
}

YPoly QBinomialTable::get(int a, int r) {
  if (r < 0 || a < 0 || r > a) return YPoly{};
  if (r == 0 || r == a) return YPoly(1);
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find({a, r}); it != memo_.end()) return it->second;
  }
  // binom(a, r) = q^r binom(a-1, r) + binom(a-1, r-1)
  const YPoly v = YPoly::power(r) * get(a - 1, r) + get(a - 1, r - 1);
  std::lock_guard lock(mu_);
  memo_.emplace(std::make_pair(a, r), v);
  return v;
}

YPoly q_binomial(int a, int r) {
  static QBinomialTable table;
  return table.get(a, r);
}

YPoly q_to_y(const YPoly& p) { return p.reflect(); }

LaurentPolynomial tau_rank_motivic(const RankLocus& loc) {
  const auto js = k_subsets(loc.n, loc.k - loc.r);
  return parallel_sum(js.size(), LaurentPolynomial(matrix_table(loc.k, loc.n)),
                      [&](std::size_t i) { return weight_function_matrix(OrbitIndex(loc.k, loc.n, js[i])); });
}

RationalExpression segre_class(const LaurentPolynomial& tau, int k, int n) {
  const TablePtr& table = tau.table();
  const auto one = LaurentPolynomial::constant(table, YPoly(1));
  std::vector<LaurentPolynomial> den;
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < n; ++v) {
      den.push_back(one + LaurentPolynomial::monomial(table, ratio(static_cast<std::size_t>(u), static_cast<std::size_t>(k + v)), YPoly::y()));
    }
  }
  return RationalExpression(tau, den);
}

RationalExpression phi_resolution(int a, int k, int n) {
  if (a < 0 || a > k || k > n) throw std::invalid_argument("phi_resolution needs 0 <= a <= k <= n");
  const TablePtr table = matrix_table(k, n);
  const auto one = LaurentPolynomial::constant(table, YPoly(1));
  auto mono = [&](std::size_t num, std::size_t den, const YPoly& c) {
    return LaurentPolynomial::monomial(table, ratio(num, den), c);
  };
  const auto subsets = k_subsets(k, a);
  auto terms = parallel_map<RationalExpression>(subsets.size(), [&](std::size_t s) {
    const auto& in = subsets[s];
    LaurentPolynomial num = one;
    std::vector<LaurentPolynomial> den;
    for (int u : in) {
      const auto au = static_cast<std::size_t>(u - 1);
      for (int v = 1; v <= n; ++v) {
        const auto bv = static_cast<std::size_t>(k + v - 1);
        num *= one - mono(au, bv, 1);
        den.push_back(one + mono(au, bv, YPoly::y()));
      }
      for (int w = 1; w <= k; ++w) {
        if (std::find(in.begin(), in.end(), w) != in.end()) continue;
        const auto aw = static_cast<std::size_t>(w - 1);
        num *= one + mono(au, aw, YPoly::y());
        den.push_back(one - mono(au, aw, 1));
      }
    }
    return RationalExpression(std::move(num), den);
  });
  RationalExpression sum(LaurentPolynomial{table});
  for (const auto& t : terms) sum += t;
  sum = sum.cancelled();
  // Only factors 1 + y alpha_u/beta_v may survive: two terms whose variable
  // parts differ by one alpha and one beta, in opposite directions.
  for (const auto& f : sum.factors()) {
    bool ok = f.poly.size() == 2;
    if (ok) {
      const Monomial lo = Monomial::from_exponents(f.poly.terms().front().exp);
      const Monomial hi = Monomial::from_exponents(f.poly.terms().back().exp);
      int alpha_moves = 0;
      int beta_moves = 0;
      int total = 0;
      for (std::size_t i = 0; i < table->arity(); ++i) {
        const int e = hi[i] - lo[i];
        if (e == 0) continue;
        if (e != 1 && e != -1) ok = false;
        total += e;
        (i < static_cast<std::size_t>(k) ? alpha_moves : beta_moves) += 1;
      }
      ok = ok && alpha_moves == 1 && beta_moves == 1 && total == 0;
    }
    if (!ok) throw NonCancellingDenominator("Phi^" + std::to_string(a) + " keeps a denominator factor other than 1 + y alpha/beta");
  }
  return sum;
}

RationalExpression segre_sieve(const RankLocus& loc) {
  const TablePtr table = matrix_table(loc.k, loc.n);
  RationalExpression sum(LaurentPolynomial{table});
  for (int a = loc.r; a <= loc.k; ++a) {
    const YPoly c = sieve_sign(a - loc.r) * q_to_y(q_binomial(a, loc.r));
    sum += phi_resolution(a, loc.k, loc.n).scaled(c);
  }
  return sum.cancelled();
}

bool verify_rank_equality(const RankLocus& loc) {
  return rat_equal(segre_class(tau_rank_motivic(loc), loc.k, loc.n), segre_sieve(loc));
}

bool sieve_matrix_inverse_check(int kmax) {
  if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
  const auto m = static_cast<std::size_t>(kmax);
  QMatrix b(m, std::vector<YPoly>(m));
  QMatrix s(m, std::vector<YPoly>(m));
  for (int a = 1; a <= kmax; ++a) {
    for (int r = 1; r <= kmax; ++r) {
      const YPoly qb = q_binomial(a, r);
      b[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(r - 1)] = qb;
      if (r <= a) {
        // sieve_sign is in y; the matrices here are in q.
        s[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(r - 1)] = q_to_y(sieve_sign(a - r)) * qb;
      }
    }
  }
  return is_identity(multiply(b, s)) && is_identity(multiply(s, b));
}

bool supersymmetry_check(const RankLocus& loc) {
  if (loc.k < 1) throw std::invalid_argument("supersymmetry needs k >= 1");
  const int k = loc.k;
  const int n = loc.n;
  // Target: a1..a_{k-1}, b1..b_{n-1}, t.
  std::vector<std::string> names;
  for (int u = 1; u < k; ++u) names.push_back("a" + std::to_string(u));
  for (int v = 1; v < n; ++v) names.push_back("b" + std::to_string(v));
  names.push_back("t");
  const TablePtr target = make_table(names);
  const auto t_index = static_cast<std::size_t>(k + n - 2);
  std::vector<Monomial> images;
  for (int i = 0; i < k + n; ++i) {
    Monomial m;
    if (i == k - 1 || i == k + n - 1) {
      m.set(t_index, 1);
    } else {
      m.set(static_cast<std::size_t>(i < k ? i : i - 1), 1);
    }
    images.push_back(m);
  }
  const RationalExpression lhs = segre_sieve(loc).substituted(target, images);
  if (loc.r == k) return lhs.is_zero() || lhs.cancelled().is_zero();
  const RationalExpression rhs = retable(segre_sieve(RankLocus(k - 1, n - 1, loc.r)), target);
  return rat_equal(lhs, rhs);
}

}  // namespace mcc
