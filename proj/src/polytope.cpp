#include "mcc/polytope.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "mcc/lp.hpp"

namespace mcc {

struct ConvexPolytope::Cache {
  std::once_flag once;
  std::vector<LatticePoint> vertices;
};

namespace {

void require_dim(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch("polytope dimensions differ");
}

// pt in conv(points), points nonempty.
bool in_hull(std::span<const int> pt, const std::vector<LatticePoint>& points) {
  const std::size_t d = pt.size();
  // Bounding box first.
  for (std::size_t i = 0; i < d; ++i) {
    int lo = points.front()[i], hi = lo;
    for (const auto& g : points) {
      lo = std::min(lo, g[i]);
      hi = std::max(hi, g[i]);
    }
    if (pt[i] < lo || pt[i] > hi) return false;
  }
  for (const auto& g : points) {
    if (std::equal(g.begin(), g.end(), pt.begin())) return true;
  }
  if (points.size() == 1) return false;
  // sum_g lambda_g g = pt, sum_g lambda_g = 1, lambda >= 0.
  lp::Matrix a(d + 1, lp::Vector(points.size()));
  lp::Vector b(d + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) a[i][j] = points[j][i];
    a[d][j] = 1;
  }
  for (std::size_t i = 0; i < d; ++i) b[i] = pt[i];
  b[d] = 1;
  return lp::find_nonnegative_solution(a, b).has_value();
}

}  // namespace

ConvexPolytope::ConvexPolytope(std::size_t dim) : dim_(dim), cache_(std::make_shared<Cache>()) {}

ConvexPolytope::ConvexPolytope(std::size_t dim, std::vector<LatticePoint> generators)
    : dim_(dim), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) require_dim(g.size(), dim_);
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
}

const std::vector<LatticePoint>& ConvexPolytope::vertices() const {
  std::call_once(cache_->once, [this] {
    if (generators_.size() <= 2) {
      cache_->vertices = generators_;
      return;
    }
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      std::vector<LatticePoint> others;
      others.reserve(generators_.size() - 1);
      for (std::size_t j = 0; j < generators_.size(); ++j) {
        if (j != k) others.push_back(generators_[j]);
      }
      if (!in_hull(generators_[k], others)) cache_->vertices.push_back(generators_[k]);
    }
  });
  return cache_->vertices;
}

bool operator==(const ConvexPolytope& a, const ConvexPolytope& b) {
  return a.dim() == b.dim() && contains(a, b) && contains(b, a);
}

ConvexPolytope newton_polytope(const LaurentPolynomial& p) {
  const std::size_t d = p.table()->arity();
  std::vector<LatticePoint> gens;
  for (const auto& m : p.support()) gens.push_back(m.to_vector(d));
  return ConvexPolytope(d, std::move(gens));
}

bool member(std::span<const int> pt, const ConvexPolytope& p) {
  require_dim(pt.size(), p.dim());
  if (p.is_empty()) return false;
  return in_hull(pt, p.vertices());
}

bool contains(const ConvexPolytope& outer, const ConvexPolytope& inner) {
  require_dim(outer.dim(), inner.dim());
  if (inner.is_empty()) return true;
  if (outer.is_empty()) return false;
  const auto& gens = inner.generators();
  return std::all_of(gens.begin(), gens.end(), [&](const LatticePoint& g) { return member(g, outer); });
}

ConvexPolytope minkowski(const ConvexPolytope& u, const ConvexPolytope& v) {
  require_dim(u.dim(), v.dim());
  if (u.is_empty() || v.is_empty()) return ConvexPolytope(u.dim());
  std::vector<LatticePoint> gens;
  for (const auto& a : u.vertices()) {
    for (const auto& b : v.vertices()) {
      LatticePoint s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      gens.push_back(std::move(s));
    }
  }
  return ConvexPolytope(u.dim(), std::move(gens));
}

std::optional<std::pair<long, long>> project(const ConvexPolytope& p, std::span<const int> s) {
  require_dim(s.size(), p.dim());
  if (p.is_empty()) return std::nullopt;
  long lo = 0, hi = 0;
  bool first = true;
  for (const auto& g : p.generators()) {
    long v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) v += static_cast<long>(s[i]) * g[i];
    lo = first ? v : std::min(lo, v);
    hi = first ? v : std::max(hi, v);
    first = false;
  }
  return std::make_pair(lo, hi);
}

bool is_n_small(const RationalExpression& h) {
  const std::size_t d = h.table()->arity();
  ConvexPolytope den(d, {LatticePoint(d, 0)});
  for (const auto& f : h.factors()) {
    const ConvexPolytope fp = newton_polytope(f.poly);
    for (int i = 0; i < f.multiplicity; ++i) den = minkowski(den, fp);
  }
  return contains(den, newton_polytope(h.numerator()));
}

bool punctured_containment(const ConvexPolytope& inner, const ConvexPolytope& outer) {
  require_dim(inner.dim(), outer.dim());
  if (inner.is_empty()) return true;
  const LatticePoint origin(inner.dim(), 0);
  return contains(outer, inner) && !member(origin, inner);
}

PositivityResult is_positive(std::span<const Monomial> weights, std::size_t dim) {
  if (weights.empty()) throw std::invalid_argument("is_positive needs at least one weight");
  // Unknowns [s+ (dim) | s- (dim) | surplus (k)]: W (s+ - s-) - e = 1.
  const std::size_t k = weights.size();
  lp::Matrix a(k, lp::Vector(2 * dim + k, 0));
  lp::Vector b(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      a[i][j] = weights[i][j];
      a[i][dim + j] = -weights[i][j];
    }
    a[i][2 * dim + i] = -1;
  }
  const auto x = lp::find_nonnegative_solution(a, b);
  if (!x) return {};
  std::vector<lp::Rational> s(dim);
  mpz_class den = 1;
  for (std::size_t j = 0; j < dim; ++j) {
    s[j] = (*x)[j] - (*x)[dim + j];
    den = lcm(den, mpz_class(s[j].get_den()));
  }
  std::vector<int> witness(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const mpz_class v = s[j].get_num() * (den / s[j].get_den());
    if (!v.fits_sint_p()) throw ArithmeticOverflow("positivity witness does not fit in int");
    witness[j] = static_cast<int>(v.get_si());
  }
  // Primitive direction.
  int g = 0;
  for (int w : witness) g = std::gcd(g, w < 0 ? -w : w);
  if (g > 1) {
    for (int& w : witness) w /= g;
  }
  // s.w stays a positive integer after dividing by g.
  return {true, witness};
}

LimitValue limit_at_infinity(const RationalExpression& h) {
  if (h.table()->arity() != 1) throw std::invalid_argument("limit_at_infinity expects a one-variable expression");
  const LaurentPolynomial den = h.expanded_denominator();
  if (den.is_zero()) throw std::domain_error("zero denominator");
  auto leading = [](const LaurentPolynomial& p) {
    int deg = p.terms().front().exp.lane[0];
    for (const auto& t : p.terms()) deg = std::max<int>(deg, t.exp.lane[0]);
    Monomial m;
    m.set(0, deg);
    return std::make_pair(deg, p.coefficient(m));
  };
  if (h.numerator().is_zero()) return {true, YPoly{}, YPoly{1}};
  const auto [dn, cn] = leading(h.numerator());
  const auto [dd, cd] = leading(den);
  if (dn > dd) return {false, {}, {}};
  if (dn < dd) return {true, YPoly{}, YPoly{1}};
  if (auto q = cn.exact_div(cd)) return {true, *q, YPoly{1}};
  if (cd.leading() < 0) return {true, -cn, -cd};
  return {true, cn, cd};
}

}  // namespace mcc
