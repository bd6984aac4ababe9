#include "mcc/lp.hpp"

#include <stdexcept>

namespace mcc::lp {

std::optional<Vector> find_nonnegative_solution(const Matrix& a, const Vector& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("lp: row count mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("lp: ragged matrix");
  }
  if (m == 0) return Vector(n, 0);

  // Tableau: columns [x (n) | artificial (m) | rhs]. Row signs are flipped
  // so the rhs is nonnegative, making the artificials a feasible basis.
  const std::size_t cols = n + m + 1;
  Matrix t(m, Vector(cols, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][cols - 1] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of "minimise sum of artificials".
  Vector cost(cols, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (j < n || j == cols - 1) cost[j] -= t[i][j];
    }
  }

  while (true) {
    // Bland: lowest-index column with negative reduced cost.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen for phase one

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
      }
    }
    if (cost[enter] != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < cols; ++j) {
        if (t[leave][j] != 0) cost[j] -= f * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  // -cost[rhs] is the optimal sum of artificials.
  if (cost[cols - 1] != 0) return std::nullopt;
  Vector x(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) x[basis[i]] = t[i][cols - 1];
  }
  return x;
}

}  // namespace mcc::lp
