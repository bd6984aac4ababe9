// mcc: motivic Chern classes of Schubert cells, matrix Schubert cells and A2
// rank loci.
//
// Exit status: 0 ok, 1 a verification failed, 2 usage error. Output is
// assembled completely before anything is printed, so a failing invocation
// never leaves partial output on stdout.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcc/a2.hpp"
#include "mcc/algebra.hpp"
#include "mcc/flag.hpp"
#include "mcc/golden.hpp"
#include "mcc/matrix.hpp"
#include "mcc/parallel.hpp"
#include "mcc/polytope.hpp"
#include "mcc/serialize.hpp"

using json = nlohmann::ordered_json;
using namespace mcc;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

// Anything the user got wrong that the option parser could not see.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Result {
  int status = kOk;
  json doc;
  std::string text;
};

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": '" + s + "' is not a comma-separated list of integers");
    }
  }
  return out;
}

std::vector<std::string> parse_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError("empty variable name in '" + s + "'");
    out.push_back(item);
  }
  if (out.empty()) throw UsageError("--vars needs at least one variable");
  return out;
}

json point_json(const std::vector<int>& p) { return json(p); }

json points_json(const std::vector<LatticePoint>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(point_json(p));
  return a;
}

std::string points_text(const std::vector<LatticePoint>& ps) {
  std::string s;
  for (const auto& p : ps) {
    s += "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    s += ")";
  }
  return s;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

// ---- flag ---------------------------------------------------------------

struct FlagArgs {
  std::string mu;
  std::string index;
  std::string emit = "restrictions";
  std::string route = "lazy";
  std::optional<std::string> corrupt;
};

Result run_flag(const FlagArgs& a) {
  const FlagShape shape = FlagShape::parse(a.mu);
  const CompositionIndex index = CompositionIndex::parse(shape, a.index);
  Result res;
  res.doc = {{"command", "flag"}, {"mu", shape.parts()}, {"index", index.to_string()}, {"emit", a.emit}};
  if (a.emit == "weightfn") {
    const auto wf = weight_function_flag(shape, index);
    res.doc["variables"] = wf.u.table()->names();
    res.doc["u"] = to_string(wf.u);
    res.doc["w"] = to_string(wf.w);
    res.doc["w_tilde"] = to_string(wf.w_tilde);
    res.text = "U  = " + to_string(wf.u) + "\nW  = " + to_string(wf.w) + "\nW~ = " + to_string(wf.w_tilde) + "\n";
    return res;
  }
  FixedPointClass cls = mc_schubert(shape, index, a.route == "expanded" ? Route::expanded : Route::lazy);
  if (a.corrupt) {
    // Sensitivity demo: add 1 to one restriction.
    const CompositionIndex at = CompositionIndex::parse(shape, *a.corrupt);
    const auto it = std::find(cls.points.begin(), cls.points.end(), at);
    if (it == cls.points.end()) throw std::invalid_argument("--corrupt: not a fixed point");
    cls.restrictions[static_cast<std::size_t>(it - cls.points.begin())] +=
        LaurentPolynomial::constant(beta_table(shape.n()), YPoly(1));
    res.doc["corrupted"] = at.to_string();
  }
  if (a.emit == "restrictions") {
    json arr = json::array();
    for (std::size_t i = 0; i < cls.points.size(); ++i) {
      const std::string v = to_string(cls.restrictions[i]);
      arr.push_back({{"point", cls.points[i].to_string()}, {"value", v}});
      res.text += cls.points[i].to_string() + ": " + v + "\n";
    }
    res.doc["restrictions"] = arr;
    return res;
  }
  // axioms
  const AxiomReport report = check_axioms(cls, index);
  json entries = json::array();
  res.text = "axioms for " + index.to_string() + " on Fl(" + shape.to_string() + ")\n";
  for (const auto& e : report.entries) {
    json j = {{"theta", e.theta.to_string()}};
    j["normalization"] = e.normalization ? json(*e.normalization) : json(nullptr);
    j["divisible"] = e.divisible;
    j["newton"] = e.newton;
    j["positive"] = e.positive;
    j["positivity_witness"] = e.positivity_witness ? point_json(*e.positivity_witness) : json(nullptr);
    j["newton_violation"] = e.newton_violation ? point_json(*e.newton_violation) : json(nullptr);
    j["passed"] = e.passed();
    entries.push_back(j);
    res.text += "  " + e.theta.to_string() + ": " + (e.passed() ? "pass" : "FAIL") +
                (e.normalization ? " normalization=" + yesno(*e.normalization) : "") +
                " divisible=" + yesno(e.divisible) + " newton=" + yesno(e.newton) + " positive=" + yesno(e.positive);
    if (e.newton_violation) res.text += " violation=" + points_text({*e.newton_violation});
    res.text += "\n";
  }
  res.doc["omega"] = index.to_string();
  res.doc["passed"] = report.passed();
  res.doc["entries"] = entries;
  res.text += report.passed() ? "all axioms hold\n" : "axioms FAIL\n";
  res.status = report.passed() ? kOk : kVerificationFailed;
  return res;
}

// ---- matsch -------------------------------------------------------------

struct MatschArgs {
  int k = 0;
  int n = 0;
  std::optional<std::string> j;
  std::string emit = "weightfn";
  bool sum_check = false;
};

Result run_matsch(const MatschArgs& a) {
  if (!a.j && !a.sum_check) throw UsageError("matsch needs --J or --sum-check");
  Result res;
  res.doc = {{"command", "matsch"}, {"k", a.k}, {"n", a.n}};
  if (a.k < 0 || a.n < 0 || a.k > a.n) throw UsageError("matsch needs 0 <= k <= n");
  if (a.j) {
    const OrbitIndex idx(a.k, a.n, parse_int_list(*a.j, "--J"));
    const auto w = weight_function_matrix(idx);
    res.doc["J"] = idx.j;
    res.doc["variables"] = w.table()->names();
    res.doc["weight_function"] = to_string(w);
    res.text += "W_{" + idx.to_string() + "} = " + to_string(w) + "\n";
  }
  if (a.sum_check) {
    const auto s = orbit_sum_identity(a.k, a.n);
    res.doc["sum_check"] = {{"holds", s.holds}, {"residual", to_string(s.residual)}};
    res.text += std::string("sum over J of W_{k,n,J} = prod (1+y a_u/b_v): ") + (s.holds ? "holds" : "FAILS") + "\n";
    if (!s.holds) {
      res.text += "residual: " + to_string(s.residual) + "\n";
      res.status = kVerificationFailed;
    }
  }
  return res;
}

// ---- a2 -----------------------------------------------------------------

struct A2Args {
  int k = 0;
  int n = 0;
  int r = 0;
  std::string method = "both";
  bool q_display = false;
};

Result run_a2(const A2Args& a) {
  const RankLocus loc(a.k, a.n, a.r);
  const CoefficientStyle style = a.q_display ? CoefficientStyle::q : CoefficientStyle::y;
  Result res;
  res.doc = {{"command", "a2"}, {"k", a.k}, {"n", a.n}, {"r", a.r}, {"method", a.method},
             {"coefficients", a.q_display ? "q" : "y"}};
  std::optional<RationalExpression> motivic, sieve;
  if (a.method != "sieve") {
    motivic = segre_class(tau_rank_motivic(loc), a.k, a.n);
    res.doc["motivic"] = to_string(*motivic, style);
    res.text += "motivic: " + to_string(*motivic, style) + "\n";
  }
  if (a.method != "motivic") {
    sieve = segre_sieve(loc);
    res.doc["sieve"] = to_string(*sieve, style);
    res.text += "sieve:   " + to_string(*sieve, style) + "\n";
  }
  if (motivic && sieve) {
    const bool eq = rat_equal(*motivic, *sieve);
    res.doc["equal"] = eq;
    res.text += eq ? "EQUAL\n" : "NOT EQUAL\n";
    if (!eq) res.status = kVerificationFailed;
  }
  return res;
}

// ---- polytope -----------------------------------------------------------

struct PolytopeArgs {
  std::string vars;
  std::string expr;
  std::optional<std::string> within;
};

Result run_polytope(const PolytopeArgs& a) {
  const TablePtr t = make_table(parse_names(a.vars));
  const RationalExpression e = parse_expression(a.expr, t);
  if (!e.is_polynomial()) throw UsageError("--expr must be a Laurent polynomial");
  const ConvexPolytope p = newton_polytope(e.numerator());
  Result res;
  res.doc = {{"command", "polytope"},
             {"variables", t->names()},
             {"generators", points_json(p.generators())},
             {"vertices", points_json(p.vertices())}};
  res.text = "generators: " + points_text(p.generators()) + "\nvertices:   " + points_text(p.vertices()) + "\n";
  if (a.within) {
    const RationalExpression big = parse_expression(*a.within, t);
    if (!big.is_polynomial()) throw UsageError("--within must be a Laurent polynomial");
    const ConvexPolytope q = newton_polytope(big.numerator());
    const bool c = contains(q, p);
    const bool pc = punctured_containment(p, q);
    res.doc["within"] = {{"vertices", points_json(q.vertices())}, {"contained", c}, {"punctured_contained", pc}};
    res.text += "within " + points_text(q.vertices()) + ": contained=" + yesno(c) + " punctured=" + yesno(pc) + "\n";
  }
  return res;
}

// ---- qbinom -------------------------------------------------------------

Result run_qbinom(int a, int r) {
  if (a < 0) throw UsageError("--a must be nonnegative");
  const YPoly b = q_binomial(a, r);
  Result res;
  res.doc = {{"command", "qbinom"}, {"a", a}, {"r", r}, {"q_binomial", b.to_string("q")}, {"coefficients", b.coefficients()}};
  res.text = b.to_string("q") + "\n";
  return res;
}

// ---- limit --------------------------------------------------------------

struct LimitArgs {
  std::string expr;
  std::string vars = "xi";
  std::optional<std::string> s;
};

Result run_limit(const LimitArgs& a) {
  const auto names = parse_names(a.vars);
  const TablePtr t = make_table(names);
  RationalExpression e = parse_expression(a.expr, t);
  if (a.s) {
    const auto s = parse_int_list(*a.s, "--s");
    if (s.size() != names.size()) throw UsageError("--s needs one entry per variable");
    const TablePtr xi = xi_table();
    std::vector<Monomial> images(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) images[i].set(0, s[i]);
    e = e.substituted(xi, images);
  } else if (names.size() != 1) {
    throw UsageError("several variables need a direction --s");
  }
  const LimitValue l = limit_at_infinity(e);
  Result res;
  res.doc = {{"command", "limit"}, {"expression", to_string(e)}, {"finite", l.finite}};
  if (l.finite) {
    std::string v = l.numerator.to_string();
    if (!(l.denominator == YPoly(1))) v = "(" + v + ")/(" + l.denominator.to_string() + ")";
    res.doc["value"] = v;
    res.doc["numerator"] = l.numerator.coefficients();
    res.doc["denominator"] = l.denominator.coefficients();
    res.text = v + "\n";
  } else {
    res.doc["value"] = nullptr;
    res.text = "infinite\n";
  }
  return res;
}

// ---- selftest -----------------------------------------------------------

Result run_selftest() {
  const auto results = run_golden(golden_checks());
  Result res;
  json checks = json::array();
  std::size_t passed = 0;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.group.size() + r.name.size() + 3);
  for (const auto& r : results) {
    passed += r.passed;
    checks.push_back({{"group", r.group}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    std::string label = r.group + " / " + r.name;
    label.resize(width, ' ');
    res.text += (r.passed ? "PASS  " : "FAIL  ") + label + (r.detail.empty() ? "" : "  " + r.detail) + "\n";
  }
  const bool ok = passed == results.size();
  res.text += std::to_string(passed) + "/" + std::to_string(results.size()) + " golden checks passed\n";
  res.doc = {{"command", "selftest"}, {"passed", ok}, {"total", results.size()}, {"failed", results.size() - passed},
             {"checks", checks}};
  res.status = ok ? kOk : kVerificationFailed;
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motivic Chern classes of Schubert cells, matrix Schubert cells and A2 rank loci"};
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<std::size_t> threads;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", threads, "Worker threads (default: MCC_THREADS, else 1)")->check(CLI::PositiveNumber);

  FlagArgs flag;
  auto* flag_cmd = app.add_subcommand("flag", "Schubert cells in partial flag varieties");
  flag_cmd->add_option("--mu", flag.mu, "Shape, e.g. 2,2")->required();
  flag_cmd->add_option("--index", flag.index, "Cell, e.g. 1,3/2,4")->required();
  flag_cmd->add_option("--emit", flag.emit, "What to print")
      ->check(CLI::IsMember({"weightfn", "restrictions", "axioms"}));
  flag_cmd->add_option("--route", flag.route, "Restriction route")->check(CLI::IsMember({"lazy", "expanded"}));
  flag_cmd->add_option("--corrupt", flag.corrupt, "Add 1 to the restriction at this fixed point first");

  MatschArgs mat;
  auto* mat_cmd = app.add_subcommand("matsch", "Matrix Schubert cells in Hom(C^k, C^n)");
  mat_cmd->add_option("--k", mat.k)->required();
  mat_cmd->add_option("--n", mat.n)->required();
  mat_cmd->add_option("--J", mat.j, "Subset of 1..n, e.g. 2,3 (empty string for the empty set)");
  mat_cmd->add_option("--emit", mat.emit)->check(CLI::IsMember({"weightfn"}));
  mat_cmd->add_flag("--sum-check", mat.sum_check, "Check the sum over all cells");

  A2Args a2;
  auto* a2_cmd = app.add_subcommand("a2", "Rank loci in Hom(C^k, C^n)");
  a2_cmd->add_option("--k", a2.k)->required();
  a2_cmd->add_option("--n", a2.n)->required();
  a2_cmd->add_option("--r", a2.r, "Kernel dimension")->required();
  a2_cmd->add_option("--method", a2.method)->check(CLI::IsMember({"motivic", "sieve", "both"}));
  a2_cmd->add_flag("--q-display", a2.q_display, "Print coefficients in q = -y");

  PolytopeArgs poly;
  auto* poly_cmd = app.add_subcommand("polytope", "Newton polytope of a Laurent polynomial");
  poly_cmd->add_option("--vars", poly.vars, "Variables, e.g. a,b")->required();
  poly_cmd->add_option("--expr", poly.expr, "Polynomial, e.g. '(1+y)/(a*b)+b^2/a^3'")->required();
  poly_cmd->add_option("--within", poly.within, "Also test containment in N(this polynomial) minus the origin");

  int qa = 0;
  int qr = 0;
  auto* q_cmd = app.add_subcommand("qbinom", "Gaussian binomial coefficient");
  q_cmd->add_option("--a", qa)->required();
  q_cmd->add_option("--r", qr)->required();

  LimitArgs lim;
  auto* lim_cmd = app.add_subcommand("limit", "Limit of a one-variable rational function at infinity");
  lim_cmd->add_option("--expr", lim.expr, "e.g. '(1+y*xi)/(1-xi)'")->required();
  lim_cmd->add_option("--vars", lim.vars, "Variables of --expr (default xi)");
  lim_cmd->add_option("--s", lim.s, "Direction: substitute var_i -> xi^{s_i} first");

  auto* self_cmd = app.add_subcommand("selftest", "Run the pinned golden examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (threads) set_thread_count(*threads);

  Result res;
  try {
    if (*flag_cmd) {
      res = run_flag(flag);
    } else if (*mat_cmd) {
      res = run_matsch(mat);
    } else if (*a2_cmd) {
      res = run_a2(a2);
    } else if (*poly_cmd) {
      res = run_polytope(poly);
    } else if (*q_cmd) {
      res = run_qbinom(qa, qr);
    } else if (*lim_cmd) {
      res = run_limit(lim);
    } else if (*self_cmd) {
      res = run_selftest();
    }
  } catch (const std::logic_error& e) {
    // Bad shapes, indices, ranges, expressions and mismatched tables.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }

  if (format == "json") {
    std::cout << res.doc.dump(2) << "\n";
  } else {
    std::cout << res.text;
  }
  return res.status;
}
