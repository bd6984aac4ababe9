#include "mcc/symmetrize.hpp"

#include <algorithm>
#include <numeric>

#include "mcc/parallel.hpp"

namespace mcc {

std::int64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

std::vector<std::vector<std::size_t>> block_permutations(std::size_t arity, const std::vector<Block>& blocks) {
  std::vector<std::size_t> identity(arity);
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out{identity};
  for (const auto& b : blocks) {
    if (b.begin + b.size > arity) throw std::invalid_argument("block out of range");
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : out) {
      std::vector<std::size_t> local(b.size);
      std::iota(local.begin(), local.end(), b.begin);
      do {
        auto p = base;
        for (std::size_t i = 0; i < b.size; ++i) p[b.begin + i] = local[i];
        next.push_back(std::move(p));
      } while (std::next_permutation(local.begin(), local.end()));
    }
    out = std::move(next);
  }
  return out;
}

RationalExpression symmetrize(const RationalExpression& u, const std::vector<Block>& blocks, std::int64_t divisor) {
  if (divisor < 1) throw std::invalid_argument("symmetrize divisor must be positive");
  const auto perms = block_permutations(u.table()->arity(), blocks);
  auto terms = parallel_map<RationalExpression>(perms.size(), [&](std::size_t i) { return u.permuted(perms[i]); });
  RationalExpression sum = RationalExpression(LaurentPolynomial(u.table()));
  for (const auto& t : terms) sum += t;
  sum = sum.cancelled();
  if (divisor == 1) return sum;

  std::vector<Term> divided(sum.numerator().terms().begin(), sum.numerator().terms().end());
  for (auto& t : divided) {
    if (t.coeff % divisor != 0) throw InexactDivision("symmetrized numerator is not divisible by " + std::to_string(divisor));
    t.coeff /= divisor;
  }
  return RationalExpression(LaurentPolynomial(u.table(), std::move(divided)), sum.denominator_factors());
}

}  // namespace mcc
