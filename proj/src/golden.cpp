#include "mcc/golden.hpp"

#include <exception>

#include "mcc/a2.hpp"
#include "mcc/algebra.hpp"
#include "mcc/flag.hpp"
#include "mcc/matrix.hpp"
#include "mcc/polytope.hpp"
#include "mcc/serialize.hpp"

namespace mcc {

namespace {

LaurentPolynomial poly(const std::string& text, const TablePtr& t) { return parse_expression(text, t).as_polynomial(); }

ConvexPolytope hull(std::vector<LatticePoint> pts) {
  const std::size_t dim = pts.empty() ? 0 : pts.front().size();
  return ConvexPolytope(dim, std::move(pts));
}

Monomial mono(std::initializer_list<int> e) { return Monomial(std::vector<int>(e)); }

// The positive action (ab, a^3 b^-2) on C^2.
struct PositivePlane {
  TablePtr t = make_table({"a", "b"});
  std::vector<Monomial> weights{mono({1, 1}), mono({3, -2})};
  std::vector<Monomial> x_axis{mono({1, 1})};
  std::vector<Monomial> y_axis{mono({3, -2})};

  LaurentPolynomial lam_y(const std::vector<Monomial>& w) const { return lambda_class(t, w, LambdaSign::y, true); }
  LaurentPolynomial lam_m(const std::vector<Monomial>& w) const {
    return lambda_class(t, w, LambdaSign::minus_one, true);
  }
  LaurentPolynomial plane() const { return lam_y(weights); }
  LaurentPolynomial x() const { return lam_y(x_axis) * lam_m(y_axis); }
  LaurentPolynomial y() const { return lam_m(x_axis) * lam_y(y_axis); }
  LaurentPolynomial origin() const { return lam_m(weights); }
  LaurentPolynomial x_punct() const { return x() - origin(); }
  LaurentPolynomial y_punct() const { return y() - origin(); }
  LaurentPolynomial plane_punct() const { return plane() - origin(); }
};

void add_atoms(std::vector<GoldenCheck>& out) {
  out.push_back({"atoms", "tau of the origin in C is 1-1/a", [] {
                   const auto t = make_table({"a"});
                   const Monomial a = mono({1});
                   return lambda_class(t, {&a, 1}, LambdaSign::minus_one, true) == poly("1-1/a", t);
                 }});
  out.push_back({"atoms", "tau of C in C is 1+y/a", [] {
                   const auto t = make_table({"a"});
                   const Monomial a = mono({1});
                   return lambda_class(t, {&a, 1}, LambdaSign::y, true) == poly("1+y/a", t);
                 }});
  out.push_back({"atoms", "tau of C minus origin is (1+y)/a", [] {
                   const auto t = make_table({"a"});
                   const Monomial a = mono({1});
                   const auto diff = lambda_class(t, {&a, 1}, LambdaSign::y, true) -
                                     lambda_class(t, {&a, 1}, LambdaSign::minus_one, true);
                   return diff == poly("(1+y)/a", t) && poly("1-1/a", t) + poly("(1+y)/a", t) == poly("1+y/a", t);
                 }});
}

void add_positive_plane(std::vector<GoldenCheck>& out) {
  out.push_back({"positive plane", "seven orbit classes", [] {
                   const PositivePlane p;
                   const auto& t = p.t;
                   return p.plane() == poly("(1+y/(a*b))*(1+y*b^2/a^3)", t) &&
                          p.x() == poly("(1+y/(a*b))*(1-b^2/a^3)", t) &&
                          p.y() == poly("(1-1/(a*b))*(1+y*b^2/a^3)", t) &&
                          p.origin() == poly("(1-1/(a*b))*(1-b^2/a^3)", t) &&
                          p.x_punct() == poly("(1+y)/(a*b)*(1-b^2/a^3)", t) &&
                          p.y_punct() == poly("(1-1/(a*b))*(1+y)*b^2/a^3", t) &&
                          p.plane_punct() == poly("(y^2-1)*b/a^4+(y+1)/(a*b)+(y+1)*b^2/a^3", t);
                 }});
  out.push_back({"positive plane", "Newton polytopes of the punctured orbits", [] {
                   const PositivePlane p;
                   return newton_polytope(p.x_punct()) == hull({{-4, 1}, {-1, -1}}) &&
                          newton_polytope(p.y_punct()) == hull({{-4, 1}, {-3, 2}}) &&
                          newton_polytope(p.plane_punct()) == hull({{-4, 1}, {-1, -1}, {-3, 2}});
                 }});
  out.push_back({"positive plane", "punctured containment in N(lambda_-1)", [] {
                   const PositivePlane p;
                   const auto big = newton_polytope(p.origin());
                   if (!(big == hull({{-4, 1}, {-1, -1}, {-3, 2}, {0, 0}}))) return false;
                   for (const auto& c : {p.x_punct(), p.y_punct(), p.plane_punct()}) {
                     if (!punctured_containment(newton_polytope(c), big)) return false;
                   }
                   return true;
                 }});
  out.push_back({"positive plane", "origin outside N(tau(C^2 - 0))", [] {
                   const PositivePlane p;
                   const std::vector<int> o{0, 0};
                   return !member(o, newton_polytope(p.plane_punct()));
                 }});
  out.push_back({"positive plane", "restrictions over lambda_-1 are N-small", [] {
                   const PositivePlane p;
                   for (const auto& c : {p.plane(), p.x(), p.y(), p.origin(), p.x_punct(), p.y_punct(),
                                         p.plane_punct()}) {
                     if (!is_n_small(RationalExpression(c, {p.origin()}))) return false;
                   }
                   return true;
                 }});
  out.push_back({"positive plane", "action is positive with witness s=(1,0)", [] {
                   const PositivePlane p;
                   const auto r = is_positive(p.weights, 2);
                   if (!r.positive || !r.witness) return false;
                   // s=(1,0) itself is a valid witness.
                   for (const auto& w : p.weights) {
                     if (w[0] <= 0) return false;
                   }
                   return true;
                 }});
  out.push_back({"positive plane", "toric substitution s=(1,0) of lambda_-1", [] {
                   const PositivePlane p;
                   const std::vector<int> s{1, 0};
                   const auto xi = xi_table();
                   return toric_substitute(p.origin(), s, xi) == poly("(1-1/xi)*(1-1/xi^3)", xi);
                 }});
  out.push_back({"positive plane", "lambda_y of the dual weights", [] {
                   const PositivePlane p;
                   return p.plane() == poly("(1+y/(a*b))*(1+y/(a^3*b^-2))", p.t);
                 }});
}

void add_hyperbolic_plane(std::vector<GoldenCheck>& out) {
  auto punctured = [] {
    const auto t = make_table({"a"});
    const std::vector<Monomial> w{mono({1}), mono({-1})};
    return lambda_class(t, w, LambdaSign::y, true) - lambda_class(t, w, LambdaSign::minus_one, true);
  };
  out.push_back({"hyperbolic plane", "tau(C^2 - 0) = (y+1)/a + (y^2-1) + (y+1)a", [punctured] {
                   const auto p = punctured();
                   return p == poly("(y+1)/a+(y^2-1)+(y+1)*a", p.table());
                 }});
  out.push_back({"hyperbolic plane", "Newton polytope is [-1,1] and contains 0", [punctured] {
                   const auto n = newton_polytope(punctured());
                   const std::vector<int> o{0};
                   return n == hull({{-1}, {1}}) && member(o, n);
                 }});
  out.push_back({"hyperbolic plane", "punctured containment fails", [punctured] {
                   const auto t = make_table({"a"});
                   const std::vector<Monomial> w{mono({1}), mono({-1})};
                   const auto big = newton_polytope(lambda_class(t, w, LambdaSign::minus_one, true));
                   return big == hull({{-1}, {1}}) && !punctured_containment(newton_polytope(punctured()), big);
                 }});
  out.push_back({"hyperbolic plane", "action is not positive", [] {
                   const std::vector<Monomial> w{mono({1}), mono({-1})};
                   return !is_positive(w, 1).positive;
                 }});
}

void add_limits(std::vector<GoldenCheck>& out) {
  out.push_back({"limits", "(1+y xi)/(1-xi) -> -y", [] {
                   const auto l = limit_at_infinity(parse_expression("(1+y*xi)/(1-xi)", xi_table()));
                   return l.finite && l.numerator == YPoly{0, -1} && l.denominator == YPoly(1);
                 }});
  out.push_back({"limits", "(1+y/xi)/(1-1/xi) -> 1", [] {
                   const auto l = limit_at_infinity(parse_expression("(1+y/xi)/(1-1/xi)", xi_table()));
                   return l.finite && l.numerator == YPoly(1) && l.denominator == YPoly(1);
                 }});
}

std::vector<int> range_to(int n) {
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) v.push_back(i);
  return v;
}

void add_matrix(std::vector<GoldenCheck>& out) {
  out.push_back({"matrix weight functions", "W_{1,2,{1}}", [] {
                   const auto w = weight_function_matrix(OrbitIndex(1, 2, {1}));
                   return w == poly("(1+y)*(a1/b1)*(1+y*a1/b2)", w.table());
                 }});
  out.push_back({"matrix weight functions", "W_{1,2,{2}}", [] {
                   const auto w = weight_function_matrix(OrbitIndex(1, 2, {2}));
                   return w == poly("(1+y)*(1-a1/b1)*(a1/b2)", w.table());
                 }});
  out.push_back({"matrix weight functions", "W_{1,2,{}}", [] {
                   const auto w = weight_function_matrix(OrbitIndex(1, 2, {}));
                   return w == poly("(1-a1/b1)*(1-a1/b2)", w.table());
                 }});
  out.push_back({"matrix weight functions", "W_{1,n,{u}} closed form, n <= 4", [] {
                   for (int n = 1; n <= 4; ++n) {
                     for (int u = 1; u <= n; ++u) {
                       std::string e = "(1+y)*a1/b" + std::to_string(u);
                       for (int i = 1; i < u; ++i) e += "*(1-a1/b" + std::to_string(i) + ")";
                       for (int i = u + 1; i <= n; ++i) e += "*(1+y*a1/b" + std::to_string(i) + ")";
                       const auto w = weight_function_matrix(OrbitIndex(1, n, {u}));
                       if (!(w == poly(e, w.table()))) return false;
                     }
                   }
                   return true;
                 }});
  out.push_back({"matrix weight functions", "W_{2,2,{1,2}}", [] {
                   const auto w = weight_function_matrix(OrbitIndex(2, 2, {1, 2}));
                   return w == poly("(1+y)^2*a1*a2/(b1*b2)*(y^2*a1*a2/(b1*b2)+y*(-a1*a2/(b1*b2)+a1/b1+a1/b2+a2/b1+a2/b2-1)+1)",
                                    w.table());
                 }});
  out.push_back({"matrix weight functions", "W_{2,4,{2,3}}", [] {
                   const auto w = weight_function_matrix(OrbitIndex(2, 4, {2, 3}));
                   return w == poly("(1+y)^2*(1-a1/b1)*(1+y*a1/b4)*(1-a2/b1)*(1+y*a2/b4)*a1*a2*((1-y)/(b2*b3)+(y^2-y)*a1*a2/"
                                    "(b2^2*b3^2)+y*(a1+a2)*(1/(b2*b3^2)+1/(b2^2*b3)))",
                                    w.table());
                 }});
  out.push_back({"matrix weight functions", "k=1 orbit sum factors, n <= 4", [] {
                   for (int n = 1; n <= 4; ++n) {
                     if (!orbit_sum_identity(1, n).holds) return false;
                   }
                   return true;
                 }});
  out.push_back({"matrix weight functions", "full-rank matrix weight functions equal Grassmannian ones", [] {
                   return flag_matrix_bridge(4, {1, 3}) && flag_matrix_bridge(3, range_to(2));
                 }});
}

void add_grassmannian(std::vector<GoldenCheck>& out) {
  static const char* kU1 =
      "(1+y)^2*a1*a2/(b1*b3)*(1+y*a1/b2)*(1+y*a1/b3)*(1+y*a1/b4)*(1-a2/b1)*(1-a2/b2)*(1+y*a2/b4)*(1+y*a2/a1)/"
      "(1-a2/a1)";
  out.push_back({"grassmannian", "U and the modified weight function of (13|24)", [] {
                   const FlagShape s({2, 2});
                   const auto wf = weight_function_flag(s, CompositionIndex::parse(s, "1,3/2,4"));
                   const auto t = wf.u.table();
                   const auto u1 = parse_expression(kU1, t);
                   const std::vector<std::size_t> swap{1, 0, 2, 3, 4, 5};
                   const auto e = parse_expression("(1+y)^2*(1+y*a2/a1)*(1+y*a1/a2)", t).as_polynomial();
                   return rat_equal(wf.u, u1) && rat_equal(wf.w_tilde, (u1 + u1.permuted(swap)).divided_by(e));
                 }});
  out.push_back({"grassmannian", "restriction to (12|34) is 0", [] {
                   const FlagShape s({2, 2});
                   const auto c = mc_schubert(s, CompositionIndex::parse(s, "1,3/2,4"));
                   return c.at(CompositionIndex::parse(s, "1,2/3,4")).is_zero();
                 }});
  out.push_back({"grassmannian", "restriction to (13|24)", [] {
                   const FlagShape s({2, 2});
                   const auto c = mc_schubert(s, CompositionIndex::parse(s, "1,3/2,4"));
                   return c.at(CompositionIndex::parse(s, "1,3/2,4")) ==
                          poly("(1+y*b1/b2)*(1+y*b1/b4)*(1-b3/b2)*(1+y*b3/b4)", beta_table(4));
                 }});
  out.push_back({"grassmannian", "restriction to (34|12)", [] {
                   const FlagShape s({2, 2});
                   const auto c = mc_schubert(s, CompositionIndex::parse(s, "1,3/2,4"));
                   return c.at(CompositionIndex::parse(s, "3,4/1,2")) ==
                          poly("(1+y)*b4/(b1^2*b2^2)*(y^2*(b1*b2*b3-b3^2*b4)+y*(2*b1*b2*b3+b1*b2*b4-b1*b3*b4+b2^2*b3-"
                               "b2*b3^2-2*b2*b3*b4)+b1*b2^2-b2*b3*b4)",
                               beta_table(4));
                 }});
  out.push_back({"grassmannian", "Newton polytope at (34|12) inside the normal polytope", [] {
                   const FlagShape s({2, 2});
                   const auto c = mc_schubert(s, CompositionIndex::parse(s, "1,3/2,4"));
                   const auto t = beta_table(4);
                   const auto big = newton_polytope(poly("(1-b3/b1)*(1-b3/b2)*(1-b4/b1)*(1-b4/b2)", t));
                   return punctured_containment(newton_polytope(c.at(CompositionIndex::parse(s, "3,4/1,2"))), big);
                 }});
  out.push_back({"grassmannian", "axioms for (13|24)", [] {
                   const FlagShape s({2, 2});
                   const auto i = CompositionIndex::parse(s, "1,3/2,4");
                   return check_axioms(mc_schubert(s, i), i).passed();
                 }});
  out.push_back({"grassmannian", "index counts for (1,1), (2,2), (1,1,1)", [] {
                   return enumerate_indices(FlagShape({1, 1})).size() == 2 &&
                          enumerate_indices(FlagShape({2, 2})).size() == 6 &&
                          enumerate_indices(FlagShape({1, 1, 1})).size() == 6;
                 }});
}

void add_rank_loci(std::vector<GoldenCheck>& out) {
  out.push_back({"rank loci", "ts(Sigma^2_{2,2})", [] {
                   const auto t = matrix_table(2, 2);
                   return rat_equal(segre_sieve(RankLocus(2, 2, 2)),
                                    parse_expression("(1-a1/b1)*(1-a2/b1)*(1-a1/b2)*(1-a2/b2)/((1-q*a1/b1)*(1-q*a2/b1)*(1-"
                                                     "q*a1/b2)*(1-q*a2/b2))",
                                                     t));
                 }});
  out.push_back({"rank loci", "ts(Sigma^0_{2,2})", [] {
                   const auto t = matrix_table(2, 2);
                   return rat_equal(segre_sieve(RankLocus(2, 2, 0)),
                                    parse_expression("(q-1)^2/((1-q*a1/b1)*(1-q*a2/b1)*(1-q*a1/b2)*(1-q*a2/b2))*a1*a2/"
                                                     "(b1*b2)*(q^2*a1*a2/(b1*b2)+q*(a2*a1/(b1*b2)-a1/b1-a1/b2-a2/b1-a2/"
                                                     "b2+1)+1)",
                                                     t));
                 }});
  out.push_back({"rank loci", "motivic ts(Sigma^0_{2,2}) and ts(Sigma^2_{2,2}) agree with the sieve", [] {
                   return verify_rank_equality(RankLocus(2, 2, 0)) && verify_rank_equality(RankLocus(2, 2, 2));
                 }});
  out.push_back({"rank loci", "Phi^k_{k,n} closed form, k <= n <= 3", [] {
                   for (int n = 1; n <= 3; ++n) {
                     for (int k = 1; k <= n; ++k) {
                       const auto t = matrix_table(k, n);
                       std::string e = "1";
                       for (int u = 1; u <= k; ++u) {
                         for (int v = 1; v <= n; ++v) {
                           const std::string r = "a" + std::to_string(u) + "/b" + std::to_string(v);
                           e += "*(1-" + r + ")/(1-q*" + r + ")";
                         }
                       }
                       if (!rat_equal(phi_resolution(k, k, n), parse_expression(e, t))) return false;
                     }
                   }
                   return true;
                 }});
  out.push_back({"rank loci", "q-binomial base rows", [] {
                   for (int a = 0; a <= 8; ++a) {
                     if (!(q_binomial(a, 0) == YPoly(1)) || !(q_binomial(a, a) == YPoly(1))) return false;
                   }
                   return q_binomial(2, 1) == YPoly({1, 1}) && q_binomial(4, 2) == YPoly({1, 1, 2, 1, 1});
                 }});
  out.push_back({"rank loci", "sieve matrices are inverse", [] { return sieve_matrix_inverse_check(6); }});
}

}  // namespace

std::vector<GoldenCheck> golden_checks() {
  std::vector<GoldenCheck> out;
  add_atoms(out);
  add_positive_plane(out);
  add_hyperbolic_plane(out);
  add_limits(out);
  add_matrix(out);
  add_grassmannian(out);
  add_rank_loci(out);
  return out;
}

std::vector<GoldenResult> run_golden(const std::vector<GoldenCheck>& checks) {
  std::vector<GoldenResult> results;
  results.reserve(checks.size());
  for (const auto& c : checks) {
    GoldenResult r{c.group, c.name, false, {}};
    try {
      r.passed = c.run();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace mcc
