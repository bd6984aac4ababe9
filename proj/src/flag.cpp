#include "mcc/flag.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "mcc/algebra.hpp"
#include "mcc/factored.hpp"
#include "mcc/parallel.hpp"
#include "mcc/symmetrize.hpp"

namespace mcc {

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, sep)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Offset of level j (1-based, j < N) inside flag_table.
std::size_t level_offset(const FlagShape& shape, int j) {
  std::size_t off = 0;
  for (int l = 1; l < j; ++l) off += static_cast<std::size_t>(shape.cumulative(l));
  return off;
}

Monomial ratio(std::size_t num, std::size_t den) {
  Monomial m;
  if (num == den) return m;
  m.set(num, 1);
  m.set(den, -1);
  return m;
}

Side side_of(int target, int reference) {
  if (target < reference) return Side::below;
  if (target == reference) return Side::equal;
  return Side::above;
}

std::vector<Block> alpha_blocks(const FlagShape& shape) {
  std::vector<Block> blocks;
  for (int j = 1; j < shape.levels(); ++j) {
    blocks.push_back(
        Block{"a" + std::to_string(j), level_offset(shape, j), static_cast<std::size_t>(shape.cumulative(j))});
  }
  return blocks;
}

FactoredProduct u_factors(const FlagShape& shape, const CompositionIndex& index, const TablePtr& table) {
  FactoredProduct u;
  const int nlev = shape.levels();
  const auto one = LaurentPolynomial::constant(table, YPoly(1));
  // Level N variables are the betas.
  auto var = [&](int j, int a) { return level_offset(shape, j) + static_cast<std::size_t>(a); };
  for (int j = 1; j < nlev; ++j) {
    const auto lower = index.cumulative(j);
    const auto upper = index.cumulative(j + 1);
    for (int a = 0; a < shape.cumulative(j); ++a) {
      for (int b = 0; b < shape.cumulative(j + 1); ++b) {
        u.num.push_back(psi(table, ratio(var(j, a), var(j + 1, b)), side_of(upper[b], lower[a])));
      }
    }
    for (int a = 0; a < shape.cumulative(j); ++a) {
      for (int b = a + 1; b < shape.cumulative(j); ++b) {
        const Monomial m = ratio(var(j, b), var(j, a));
        u.num.push_back(psi(table, m, Side::above));
        u.den.push_back(one - LaurentPolynomial::monomial(table, m));
      }
    }
  }
  return u;
}

// e_mu as a list of factors (including the a == b factors 1 + y).
std::vector<LaurentPolynomial> e_factors(const FlagShape& shape, const TablePtr& table) {
  std::vector<LaurentPolynomial> out;
  for (int j = 1; j < shape.levels(); ++j) {
    const std::size_t off = level_offset(shape, j);
    for (int a = 0; a < shape.cumulative(j); ++a) {
      for (int b = 0; b < shape.cumulative(j); ++b) {
        out.push_back(psi(table, ratio(off + static_cast<std::size_t>(b), off + static_cast<std::size_t>(a)),
                          Side::above));
      }
    }
  }
  return out;
}

LaurentPolynomial beta_ratio(const TablePtr& beta, int num, int den) {
  return LaurentPolynomial::monomial(beta, ratio(static_cast<std::size_t>(num - 1), static_cast<std::size_t>(den - 1)));
}

}  // namespace

// ---- shapes and indices ---------------------------------------------------

FlagShape::FlagShape(std::vector<int> mu) : mu_(std::move(mu)) {
  if (mu_.empty()) throw std::invalid_argument("flag shape needs at least one part");
  for (int m : mu_) {
    if (m <= 0) throw std::invalid_argument("flag shape parts must be positive");
  }
}

FlagShape FlagShape::parse(std::string_view text) { return FlagShape(parse_int_list(text, ',')); }

int FlagShape::cumulative(int j) const {
  if (j < 0 || j > levels()) throw std::out_of_range("flag level out of range");
  return std::accumulate(mu_.begin(), mu_.begin() + j, 0);
}

std::string FlagShape::to_string() const { return join(mu_, ','); }

CompositionIndex::CompositionIndex(const FlagShape& shape, std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != shape.levels()) throw std::invalid_argument("index has wrong number of blocks");
  std::vector<int> seen(static_cast<std::size_t>(shape.n()) + 1, 0);
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    auto& b = blocks_[j];
    if (static_cast<int>(b.size()) != shape.parts()[j]) {
      throw std::invalid_argument("block " + std::to_string(j + 1) + " has size " + std::to_string(b.size()) +
                                  ", expected " + std::to_string(shape.parts()[j]));
    }
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e < 1 || e > shape.n()) throw std::invalid_argument("index element out of range");
      if (seen[static_cast<std::size_t>(e)]++) throw std::invalid_argument("index element repeated");
    }
  }
}

CompositionIndex CompositionIndex::parse(const FlagShape& shape, std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = text.find('/', start);
    const std::string_view part = text.substr(start, slash == std::string_view::npos ? slash : slash - start);
    blocks.push_back(part.empty() ? std::vector<int>{} : parse_int_list(part, ','));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return CompositionIndex(shape, std::move(blocks));
}

std::vector<int> CompositionIndex::cumulative(int j) const {
  std::vector<int> out;
  for (int l = 0; l < j; ++l) out.insert(out.end(), blocks_[static_cast<std::size_t>(l)].begin(), blocks_[static_cast<std::size_t>(l)].end());
  std::sort(out.begin(), out.end());
  return out;
}

int CompositionIndex::block_of(int e) const {
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (std::find(blocks_[j].begin(), blocks_[j].end(), e) != blocks_[j].end()) return static_cast<int>(j);
  }
  throw std::out_of_range("element not in index");
}

std::string CompositionIndex::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    if (j) out += '/';
    out += join(blocks_[j], ',');
  }
  return out;
}

std::vector<CompositionIndex> enumerate_indices(const FlagShape& shape) {
  std::vector<int> word;
  for (int j = 0; j < shape.levels(); ++j) word.insert(word.end(), static_cast<std::size_t>(shape.parts()[static_cast<std::size_t>(j)]), j);
  std::vector<CompositionIndex> out;
  do {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(shape.levels()));
    for (std::size_t e = 0; e < word.size(); ++e) blocks[static_cast<std::size_t>(word[e])].push_back(static_cast<int>(e) + 1);
    out.emplace_back(shape, std::move(blocks));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// ---- tables ---------------------------------------------------------------

TablePtr flag_table(const FlagShape& shape) {
  std::vector<std::string> names;
  const bool short_names = shape.levels() == 2;
  for (int j = 1; j < shape.levels(); ++j) {
    for (int a = 1; a <= shape.cumulative(j); ++a) {
      names.push_back(short_names ? "a" + std::to_string(a) : "a" + std::to_string(j) + "_" + std::to_string(a));
    }
  }
  for (int v = 1; v <= shape.n(); ++v) names.push_back("b" + std::to_string(v));
  if (names.size() > kMaxVariables) {
    throw std::invalid_argument("flag shape " + shape.to_string() + " needs " + std::to_string(names.size()) +
                                " variables; at most " + std::to_string(kMaxVariables) + " are supported");
  }
  return make_table(std::move(names), alpha_blocks(shape));
}

TablePtr beta_table(int n) {
  std::vector<std::string> names;
  for (int v = 1; v <= n; ++v) names.push_back("b" + std::to_string(v));
  return make_table(std::move(names));
}

// ---- weight functions -----------------------------------------------------

FlagWeightFunction weight_function_flag(const FlagShape& shape, const CompositionIndex& index) {
  const TablePtr table = flag_table(shape);
  FlagWeightFunction out;
  out.u = u_factors(shape, index, table).expand(table);
  out.w = symmetrize(out.u, alpha_blocks(shape));
  out.w_tilde = out.w;
  for (const auto& f : e_factors(shape, table)) out.w_tilde = out.w_tilde.divided_by(f);
  out.w_tilde = out.w_tilde.cancelled();
  return out;
}

std::vector<Monomial> restriction_images(const FlagShape& shape, const CompositionIndex& j) {
  std::vector<Monomial> images;
  for (int level = 1; level < shape.levels(); ++level) {
    for (int e : j.cumulative(level)) {
      Monomial m;
      m.set(static_cast<std::size_t>(e - 1), 1);
      images.push_back(m);
    }
  }
  for (int v = 0; v < shape.n(); ++v) {
    Monomial m;
    m.set(static_cast<std::size_t>(v), 1);
    images.push_back(m);
  }
  return images;
}

LaurentPolynomial restrict(const FlagShape& shape, const RationalExpression& expr, const CompositionIndex& j,
                           bool check_symmetry) {
  if (check_symmetry) {
    for (const auto& b : expr.table()->blocks()) {
      for (std::size_t i = 0; i + 1 < b.size; ++i) {
        std::vector<std::size_t> perm(expr.table()->arity());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::swap(perm[b.begin + i], perm[b.begin + i + 1]);
        if (!rat_equal(expr, expr.permuted(perm))) {
          throw std::invalid_argument("restrict: expression is not symmetric in block " + b.name);
        }
      }
    }
  }
  const auto images = restriction_images(shape, j);
  const RationalExpression r = expr.substituted(beta_table(shape.n()), images).cancelled();
  if (!r.is_polynomial()) {
    throw NonCancellingDenominator("restriction to " + j.to_string() + " keeps a denominator");
  }
  return r.numerator();
}

const LaurentPolynomial& FixedPointClass::at(const CompositionIndex& j) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == j) return restrictions[i];
  }
  throw std::out_of_range("no restriction at " + j.to_string());
}

FixedPointClass mc_schubert(const FlagShape& shape, const CompositionIndex& index, Route route) {
  FixedPointClass cls{shape, enumerate_indices(shape), {}};
  const TablePtr beta = beta_table(shape.n());
  const TablePtr table = flag_table(shape);

  if (route == Route::expanded) {
    const auto wf = weight_function_flag(shape, index);
    cls.restrictions = parallel_map<LaurentPolynomial>(
        cls.points.size(), [&](std::size_t i) { return restrict(shape, wf.w_tilde, cls.points[i], false); });
    return cls;
  }

  const FactoredProduct u = u_factors(shape, index, table);
  const auto e = e_factors(shape, table);
  const auto perms = block_permutations(table->arity(), alpha_blocks(shape));
  cls.restrictions = parallel_map<LaurentPolynomial>(cls.points.size(), [&](std::size_t i) {
    const CompositionIndex& j = cls.points[i];
    const auto base = restriction_images(shape, j);
    RationalExpression sum(LaurentPolynomial{beta});
    for (const auto& perm : perms) {
      std::vector<Monomial> images(base.size());
      for (std::size_t x = 0; x < base.size(); ++x) images[x] = base[perm[x]];
      if (auto t = u.substituted(beta, images)) sum += *t;
    }
    const RationalExpression w = sum.cancelled();
    if (!w.is_polynomial()) throw NonCancellingDenominator("symmetrized restriction keeps a denominator at " + j.to_string());
    LaurentPolynomial e_at = LaurentPolynomial::constant(beta, YPoly(1));
    for (const auto& f : e) e_at *= substitute_monomials(f, beta, base);
    auto q = exact_div(w.numerator(), e_at);
    if (!q) throw NonCancellingDenominator("e_mu does not divide the restriction at " + j.to_string());
    return *q;
  });
  return cls;
}

// ---- tangent data and axioms ----------------------------------------------

TangentData fixed_point_weights(const FlagShape& shape, const CompositionIndex& j) {
  TangentData t;
  const auto& blocks = j.blocks();
  for (std::size_t lj = 0; lj < blocks.size(); ++lj) {
    for (std::size_t lk = lj + 1; lk < blocks.size(); ++lk) {
      for (int a : blocks[lj]) {
        for (int b : blocks[lk]) {
          const Monomial w = ratio(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1));
          t.ambient_tangent.push_back(w);
          (a > b ? t.cell_normal : t.cell_tangent).push_back(w);
        }
      }
    }
  }
  (void)shape;
  return t;
}

int codimension(const CompositionIndex& index) {
  int c = 0;
  const auto& blocks = index.blocks();
  for (std::size_t lj = 0; lj < blocks.size(); ++lj) {
    for (std::size_t lk = lj + 1; lk < blocks.size(); ++lk) {
      for (int a : blocks[lj]) {
        for (int b : blocks[lk]) c += a > b;
      }
    }
  }
  return c;
}

bool AxiomReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const AxiomEntry& e) { return e.passed(); });
}

namespace {

AxiomEntry check_at(const FlagShape& shape, const LaurentPolynomial& r, const CompositionIndex& theta,
                    const CompositionIndex& omega) {
  const TablePtr beta = beta_table(shape.n());
  const std::size_t dim = static_cast<std::size_t>(shape.n());
  const TangentData t = fixed_point_weights(shape, theta);
  const LaurentPolynomial lam_t = lambda_class(beta, t.cell_tangent, LambdaSign::y, true);
  const LaurentPolynomial lam_n = lambda_class(beta, t.cell_normal, LambdaSign::minus_one, true);

  AxiomEntry e;
  e.theta = theta;
  if (t.cell_normal.empty()) {
    e.positive = true;
  } else {
    auto p = is_positive(t.cell_normal, dim);
    e.positive = p.positive;
    e.positivity_witness = p.witness;
  }
  if (theta == omega) e.normalization = r == lam_t * lam_n;

  const auto quotient = exact_div(r, lam_t);
  e.divisible = quotient.has_value();
  if (theta == omega) {
    e.newton = true;
  } else if (quotient) {
    const ConvexPolytope small = newton_polytope(*quotient);
    const ConvexPolytope big = newton_polytope(lam_n);
    e.newton = punctured_containment(small, big);
    if (!e.newton) {
      const LatticePoint origin(dim, 0);
      if (member(origin, small)) {
        e.newton_violation = origin;
      } else {
        for (const auto& g : small.generators()) {
          if (!member(g, big)) {
            e.newton_violation = g;
            break;
          }
        }
      }
    }
  }
  return e;
}

}  // namespace

AxiomReport check_axioms(const FixedPointClass& cls, const CompositionIndex& omega) {
  AxiomReport report{omega, {}};
  report.entries = parallel_map<AxiomEntry>(cls.points.size(), [&](std::size_t i) {
    return check_at(cls.shape, cls.restrictions[i], cls.points[i], omega);
  });
  return report;
}

AxiomEntry check_axioms_at(const FixedPointClass& cls, const CompositionIndex& omega, std::size_t point) {
  return check_at(cls.shape, cls.restrictions.at(point), cls.points.at(point), omega);
}

bool satisfies_gkm(const FixedPointClass& cls) {
  const TablePtr beta = beta_table(cls.shape.n());
  const auto one = LaurentPolynomial::constant(beta, YPoly(1));
  for (std::size_t i = 0; i < cls.points.size(); ++i) {
    const auto& j = cls.points[i];
    for (int a = 1; a <= cls.shape.n(); ++a) {
      for (int b = a + 1; b <= cls.shape.n(); ++b) {
        const int la = j.block_of(a);
        const int lb = j.block_of(b);
        if (la == lb) continue;
        auto blocks = j.blocks();
        std::replace(blocks[static_cast<std::size_t>(la)].begin(), blocks[static_cast<std::size_t>(la)].end(), a, b);
        std::replace(blocks[static_cast<std::size_t>(lb)].begin(), blocks[static_cast<std::size_t>(lb)].end(), b, a);
        const CompositionIndex k(cls.shape, std::move(blocks));
        if (k < j) continue;  // each edge once
        const LaurentPolynomial diff = cls.restrictions[i] - cls.at(k);
        if (!exact_div(diff, one - beta_ratio(beta, a, b))) return false;
      }
    }
  }
  return true;
}

UniquenessResult uniqueness_search(const FlagShape& shape, const CompositionIndex& omega) {
  const FixedPointClass golden = mc_schubert(shape, omega);
  const TablePtr beta = beta_table(shape.n());
  const std::size_t dim = static_cast<std::size_t>(shape.n());

  std::set<std::vector<std::int64_t>> coeff_keys;
  std::vector<YPoly> coeffs;
  auto add_coeff = [&](const YPoly& c) {
    if (coeff_keys.insert(c.coefficients()).second) coeffs.push_back(c);
  };
  add_coeff(YPoly{});
  for (const auto& r : golden.restrictions) {
    for (const auto& [m, c] : r.grouped()) {
      add_coeff(c);
      add_coeff(-c);
    }
  }

  // Lattice points allowed at each fixed point.
  std::vector<std::vector<Monomial>> support(golden.points.size());
  for (std::size_t i = 0; i < golden.points.size(); ++i) {
    const TangentData t = fixed_point_weights(shape, golden.points[i]);
    const ConvexPolytope bound = newton_polytope(lambda_class(beta, t.cell_tangent, LambdaSign::y, true) *
                                                 lambda_class(beta, t.cell_normal, LambdaSign::minus_one, true));
    std::vector<int> lo(dim), hi(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      std::vector<int> axis(dim, 0);
      axis[d] = 1;
      const auto range = project(bound, axis);
      lo[d] = static_cast<int>(range->first);
      hi[d] = static_cast<int>(range->second);
    }
    std::vector<int> pt = lo;
    while (true) {
      if (member(pt, bound)) support[i].push_back(Monomial(pt));
      std::size_t d = 0;
      for (; d < dim && pt[d] == hi[d]; ++d) pt[d] = lo[d];
      if (d == dim) break;
      ++pt[d];
    }
  }

  // Enumerate all coefficient assignments (odometer over every slot).
  std::vector<std::pair<std::size_t, Monomial>> slots;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (const auto& m : support[i]) slots.emplace_back(i, m);
  }
  std::vector<std::size_t> choice(slots.size(), 0);
  UniquenessResult result;
  bool matched = false;
  while (true) {
    FixedPointClass cand{shape, golden.points, std::vector<LaurentPolynomial>(golden.points.size(), LaurentPolynomial(beta))};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      cand.restrictions[slots[s].first] += LaurentPolynomial::monomial(beta, slots[s].second, coeffs[choice[s]]);
    }
    ++result.candidates;
    if (check_axioms(cand, omega).passed() && satisfies_gkm(cand)) {
      ++result.solutions;
      matched = matched || cand.restrictions == golden.restrictions;
    }
    std::size_t s = 0;
    while (s < slots.size() && choice[s] + 1 == coeffs.size()) choice[s++] = 0;
    if (s == slots.size()) break;
    ++choice[s];
  }
  result.unique_and_matches = matched && result.solutions == 1;
  return result;
}

}  // namespace mcc
