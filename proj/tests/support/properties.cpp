#include "support/properties.hpp"

#include <algorithm>

#include "mcc/a2.hpp"
#include "mcc/algebra.hpp"
#include "mcc/flag.hpp"
#include "mcc/matrix.hpp"
#include "mcc/parallel.hpp"
#include "mcc/serialize.hpp"
#include "mcc/symmetrize.hpp"

namespace mcc::testkit {

YPoly Gen::ypoly(int max_degree, int bound) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(uniform(0, max_degree) + 1));
  for (auto& x : c) x = uniform(-bound, bound);
  return YPoly(std::move(c));
}

YPoly Gen::nonzero_ypoly(int max_degree, int bound) {
  for (;;) {
    YPoly p = ypoly(max_degree, bound);
    if (!p.is_zero()) return p;
  }
}

Monomial Gen::monomial(std::size_t arity, int bound) {
  Monomial m;
  for (std::size_t i = 0; i < arity; ++i) m.set(i, uniform(-bound, bound));
  return m;
}

LaurentPolynomial Gen::poly(const TablePtr& t, int max_terms, int exp_bound) {
  LaurentPolynomial p(t);
  const int n = uniform(0, max_terms);
  for (int i = 0; i < n; ++i) p += LaurentPolynomial::monomial(t, monomial(t->arity(), exp_bound), ypoly());
  return p;
}

LaurentPolynomial Gen::nonzero_poly(const TablePtr& t, int max_terms, int exp_bound) {
  for (;;) {
    LaurentPolynomial p = poly(t, max_terms, exp_bound);
    if (!p.is_zero()) return p;
  }
}

LaurentPolynomial Gen::binomial(const TablePtr& t, int exp_bound) {
  Monomial m;
  do {
    m = monomial(t->arity(), exp_bound);
  } while (m.is_one());
  const auto one = LaurentPolynomial::constant(t, YPoly(1));
  return coin() ? one - LaurentPolynomial::monomial(t, m) : one + LaurentPolynomial::monomial(t, m, YPoly::y());
}

ConvexPolytope Gen::polytope(std::size_t dim, int max_points, int bound) {
  std::vector<LatticePoint> pts(static_cast<std::size_t>(uniform(1, max_points)));
  for (auto& p : pts) {
    p.resize(dim);
    for (auto& x : p) x = uniform(-bound, bound);
  }
  return ConvexPolytope(dim, std::move(pts));
}

std::vector<int> Gen::direction(std::size_t dim, int bound) {
  std::vector<int> s(dim);
  do {
    for (auto& x : s) x = uniform(-bound, bound);
  } while (std::all_of(s.begin(), s.end(), [](int x) { return x == 0; }));
  return s;
}

namespace {

std::string show(const LaurentPolynomial& p) { return to_string(p); }

std::string show(const ConvexPolytope& p) {
  std::string s = "conv{";
  for (const auto& g : p.generators()) {
    s += "(";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    s += ")";
  }
  return s + "}";
}

std::string show(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Runs `body(gen)` `cases` times; body returns an explanation on failure.
template <typename Body>
PropertyOutcome run(std::uint64_t seed, std::size_t cases, Body&& body) {
  Gen gen(seed);
  PropertyOutcome out;
  for (; out.cases < cases; ++out.cases) {
    if (auto why = body(gen)) {
      out.counterexample = "case " + std::to_string(out.cases) + ": " + *why;
      ++out.cases;
      break;
    }
  }
  return out;
}

TablePtr abc() {
  static const TablePtr t = make_table({"a", "b", "c"});
  return t;
}

ConvexPolytope union_hull(const ConvexPolytope& a, const ConvexPolytope& b) {
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return ConvexPolytope(a.dim(), std::move(g));
}

}  // namespace

PropertyOutcome ring_axioms(std::uint64_t seed, std::size_t cases) {
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    const auto a = g.poly(abc());
    const auto b = g.poly(abc());
    const auto c = g.poly(abc());
    const auto ctx = " a=" + show(a) + " b=" + show(b) + " c=" + show(c);
    if (!((a + b) + c == a + (b + c))) return "additive associativity" + ctx;
    if (!(a + b == b + a)) return "additive commutativity" + ctx;
    if (!((a * b) * c == a * (b * c))) return "multiplicative associativity" + ctx;
    if (!(a * b == b * a)) return "multiplicative commutativity" + ctx;
    if (!(a * (b + c) == a * b + a * c)) return "distributivity" + ctx;
    if (!(a + (-a)).is_zero()) return "additive inverse" + ctx;
    const auto one = LaurentPolynomial::constant(abc(), YPoly(1));
    if (!(a * one == a) || !(a + LaurentPolynomial(abc()) == a)) return "identities" + ctx;
    return std::nullopt;
  });
}

PropertyOutcome exact_division(std::uint64_t seed, std::size_t cases) {
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    const auto p = g.poly(abc());
    const auto q = g.nonzero_poly(abc());
    const auto r = exact_div(p * q, q);
    if (!r || !(*r == p)) return "exact_div(p*q, q) != p for p=" + show(p) + " q=" + show(q);
    return std::nullopt;
  });
}

PropertyOutcome toric_homomorphism(std::uint64_t seed, std::size_t cases) {
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    const auto p = g.poly(abc());
    const auto q = g.poly(abc());
    std::vector<int> s(3);
    for (auto& x : s) x = g.uniform(-3, 3);
    const auto xi = xi_table();
    auto sub = [&](const LaurentPolynomial& f) { return toric_substitute(f, s, xi); };
    if (!(sub(p * q) == sub(p) * sub(q))) return "product, p=" + show(p) + " q=" + show(q) + " s=" + show(s);
    if (!(sub(p + q) == sub(p) + sub(q))) return "sum, p=" + show(p) + " q=" + show(q) + " s=" + show(s);
    return std::nullopt;
  });
}

PropertyOutcome symmetrize_invariance(std::uint64_t seed, std::size_t cases) {
  static const TablePtr t = make_table({"a1", "a2", "a3", "b1", "b2"}, {Block{"a", 0, 3}, Block{"b", 3, 2}});
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    std::vector<LaurentPolynomial> den;
    const int nd = g.uniform(0, 2);
    for (int i = 0; i < nd; ++i) den.push_back(g.binomial(t, 1));
    const RationalExpression u(g.poly(t, 3, 1), den);
    // Use one or both blocks.
    std::vector<Block> blocks{t->blocks()[0]};
    if (g.coin()) blocks.push_back(t->blocks()[1]);
    const auto s = symmetrize(u, blocks);
    for (const auto& perm : block_permutations(t->arity(), blocks)) {
      if (!rat_equal(s.permuted(perm), s)) return "not invariant: u=" + to_string(u);
    }
    return std::nullopt;
  });
}

PropertyOutcome cancellation_law(std::uint64_t seed, std::size_t cases) {
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    const ConvexPolytope w = g.polytope(2, 4, 3);
    const ConvexPolytope v = g.polytope(2, 3, 2);
    ConvexPolytope u = g.polytope(2, 3, 3);
    if (g.coin()) {
      // Half the cases draw U inside W: generators and integral midpoints.
      std::vector<LatticePoint> pts;
      const auto& wg = w.generators();
      for (std::size_t i = 0; i < wg.size(); ++i) {
        for (std::size_t j = i; j < wg.size(); ++j) {
          if (!g.coin()) continue;
          LatticePoint m(2);
          bool integral = true;
          for (std::size_t d = 0; d < 2; ++d) {
            integral = integral && (wg[i][d] + wg[j][d]) % 2 == 0;
            m[d] = (wg[i][d] + wg[j][d]) / 2;
          }
          pts.push_back(integral ? m : wg[i]);
        }
      }
      if (pts.empty()) pts.push_back(wg.front());
      u = ConvexPolytope(2, std::move(pts));
    }
    const bool lhs = contains(w, u);
    const bool rhs = contains(minkowski(w, v), minkowski(u, v));
    if (lhs != rhs) return "U=" + show(u) + " V=" + show(v) + " W=" + show(w);
    return std::nullopt;
  });
}

PropertyOutcome minkowski_multiplicativity(std::uint64_t seed, std::size_t cases) {
  static const TablePtr t = make_table({"a", "b"});
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    const auto f = g.nonzero_poly(t);
    const auto h = g.nonzero_poly(t);
    const auto nf = newton_polytope(f);
    const auto nh = newton_polytope(h);
    if (!(newton_polytope(f * h) == minkowski(nf, nh))) return "N(fg) != N(f)+N(g), f=" + show(f) + " g=" + show(h);
    if (!contains(union_hull(nf, nh), newton_polytope(f + h))) return "N(f+g) too big, f=" + show(f) + " g=" + show(h);
    return std::nullopt;
  });
}

namespace {

// A random N-small h = f / prod(binomials) with f supported on the support
// of the expanded denominator.
RationalExpression n_small_sample(Gen& g, const TablePtr& t) {
  std::vector<LaurentPolynomial> den;
  const int nd = g.uniform(1, 2);
  LaurentPolynomial prod = LaurentPolynomial::constant(t, YPoly(1));
  for (int i = 0; i < nd; ++i) {
    den.push_back(g.binomial(t, 2));
    prod *= den.back();
  }
  LaurentPolynomial num(t);
  for (const auto& m : prod.support()) {
    if (g.coin()) num += LaurentPolynomial::monomial(t, m, g.ypoly());
  }
  return RationalExpression(num, den);
}

}  // namespace

PropertyOutcome n_small_closure(std::uint64_t seed, std::size_t cases) {
  static const TablePtr t = make_table({"a", "b"});
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    const auto h1 = n_small_sample(g, t);
    const auto h2 = n_small_sample(g, t);
    const auto ctx = " h1=" + to_string(h1) + " h2=" + to_string(h2);
    if (!is_n_small(h1) || !is_n_small(h2)) return "generator produced a non-N-small sample" + ctx;
    if (!is_n_small(h1 + h2)) return "sum not N-small" + ctx;
    if (!is_n_small(h1 * h2)) return "product not N-small" + ctx;
    return std::nullopt;
  });
}

PropertyOutcome projection_compatibility(std::uint64_t seed, std::size_t cases) {
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    const auto f = g.nonzero_poly(abc());
    const auto nf = newton_polytope(f);
    const auto xi = xi_table();
    bool exact = false;
    for (int attempt = 0; attempt < 5 && !exact; ++attempt) {
      const auto s = g.direction(3, attempt == 0 ? 3 : 97);
      const auto range = project(nf, s);
      const auto sub = toric_substitute(f, s, xi);
      const auto ns = newton_polytope(sub);
      long lo = range->second + 1;
      long hi = range->first - 1;
      for (const auto& pt : ns.generators()) {
        if (pt[0] < range->first || pt[0] > range->second) {
          return "N(f(xi^s)) outside pi_s(N(f)), f=" + show(f) + " s=" + show(s);
        }
        lo = std::min<long>(lo, pt[0]);
        hi = std::max<long>(hi, pt[0]);
      }
      exact = !ns.is_empty() && lo == range->first && hi == range->second;
    }
    if (!exact) return "no generic direction in 5 samples, f=" + show(f);
    return std::nullopt;
  });
}

PropertyOutcome positivity_limit(std::uint64_t seed, std::size_t cases) {
  static const TablePtr t = make_table({"a", "b"});
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    std::vector<Monomial> w(static_cast<std::size_t>(g.uniform(1, 3)));
    for (auto& m : w) {
      do {
        m = g.monomial(2, 3);
      } while (m.is_one());
    }
    const auto r = is_positive(w, 2);
    std::vector<LatticePoint> pts;
    for (const auto& m : w) pts.push_back(m.to_vector(2));
    const std::vector<int> origin{0, 0};
    const bool origin_in = member(origin, ConvexPolytope(2, pts));
    if (r.positive == origin_in) return "positivity disagrees with origin membership";
    if (!r.positive) return std::nullopt;
    for (const auto& m : w) {
      if (m[0] * (*r.witness)[0] + m[1] * (*r.witness)[1] < 1) return "witness fails s.w >= 1";
    }
    const auto lam = lambda_class(t, w, LambdaSign::minus_one, true);
    const auto l = limit_at_infinity(RationalExpression(toric_substitute(lam, *r.witness)));
    if (!l.finite || !(l.numerator == YPoly(1)) || !(l.denominator == YPoly(1))) {
      return "limit of lambda_-1 under the witness is not 1";
    }
    return std::nullopt;
  });
}

PropertyOutcome serialization_roundtrip(std::uint64_t seed, std::size_t cases) {
  static const TablePtr t = make_table({"a1", "a2", "b1", "b2"});
  return run(seed, cases, [](Gen& g) -> std::optional<std::string> {
    const auto p = g.poly(t, 5, 3);
    const auto text = to_string(p);
    if (!(parse_polynomial(text, t) == p)) return "y round trip: " + text;
    if (to_string(parse_polynomial(text, t)) != text) return "reprint differs: " + text;
    const auto qtext = to_string(p, CoefficientStyle::q);
    if (!(parse_polynomial(qtext, t, CoefficientStyle::q) == p)) return "q round trip: " + qtext;
    if (!(parse_expression(text, t).as_polynomial() == p)) return "infix reader disagrees: " + text;
    return std::nullopt;
  });
}

PropertyOutcome thread_determinism(std::uint64_t seed, std::size_t cases, std::size_t workers) {
  const std::size_t saved = thread_count();
  auto compute = [](int kind, int a, int b, int c) -> std::string {
    switch (kind) {
      case 0: {
        std::vector<std::vector<int>> shapes{{1, 1}, {1, 2}, {2, 1}, {1, 1, 1}};
        const FlagShape s(shapes[static_cast<std::size_t>(a) % shapes.size()]);
        const auto idx = enumerate_indices(s);
        const auto cls = mc_schubert(s, idx[static_cast<std::size_t>(b) % idx.size()]);
        std::string out;
        for (const auto& r : cls.restrictions) out += to_string(r) + ";";
        return out;
      }
      case 1: {
        const int n = 1 + a % 3;
        const int k = 1 + b % n;
        const auto js = k_subsets(n, c % (k + 1));
        const auto j = js[static_cast<std::size_t>(a + b) % js.size()];
        return to_string(weight_function_matrix(OrbitIndex(k, n, j)));
      }
      default: {
        const int n = 1 + a % 2;
        const int k = 1 + b % n;
        return to_string(segre_sieve(RankLocus(k, n, c % (k + 1))));
      }
    }
  };
  auto out = run(seed, cases, [&](Gen& g) -> std::optional<std::string> {
    const int kind = g.uniform(0, 2);
    const int a = g.uniform(0, 11);
    const int b = g.uniform(0, 11);
    const int c = g.uniform(0, 11);
    set_thread_count(1);
    const auto serial = compute(kind, a, b, c);
    set_thread_count(workers);
    const auto threaded = compute(kind, a, b, c);
    if (serial != threaded) return "kind " + std::to_string(kind) + " differs between 1 and N workers";
    return std::nullopt;
  });
  set_thread_count(saved);
  return out;
}

}  // namespace mcc::testkit
