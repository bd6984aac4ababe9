#include "mcc/serialize.hpp"

#include <cctype>
#include <charconv>

namespace mcc {

namespace {

std::string monomial_suffix(const Monomial& m, const VariableTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.arity(); ++i) {
    if (m[i] == 0) continue;
    out += "*" + table.names()[i] + "^" + std::to_string(m[i]);
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool at_ident() {
    const char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    const auto* begin = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), v);
    if (ec != std::errc{} || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }
  std::int64_t signed_integer() {
    const bool neg = accept('-');
    const std::int64_t v = integer();
    return neg ? -v : v;
  }
  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected an identifier");
    return std::string(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// ypoly := monomial (('+'|'-') monomial)*, monomial := [int ['*']] [var ['^' int]]
YPoly parse_ypoly(Cursor& c, const std::string& var) {
  YPoly acc;
  bool first = true;
  while (true) {
    std::int64_t sign = 1;
    if (c.accept('-')) {
      sign = -1;
    } else if (!first && !c.accept('+')) {
      break;
    } else if (first) {
      c.accept('+');
    }
    std::int64_t coeff = 1;
    bool have_number = false;
    if (c.at_digit()) {
      coeff = c.integer();
      have_number = true;
    }
    int degree = 0;
    if (have_number && c.accept('*')) {
      if (c.ident() != var) c.fail("expected '" + var + "'");
      degree = 1;
    } else if (!have_number) {
      if (c.ident() != var) c.fail("expected '" + var + "'");
      degree = 1;
    }
    if (degree == 1 && c.accept('^')) degree = static_cast<int>(c.integer());
    acc += YPoly(checked_mul(sign, coeff)) * YPoly::power(degree);
    first = false;
    const char nx = c.peek();
    if (nx != '+' && nx != '-') break;
  }
  return acc;
}

}  // namespace

std::string to_string(const LaurentPolynomial& p, CoefficientStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, coeff] : p.grouped()) {
    if (!out.empty()) out += '+';
    const std::string c = style == CoefficientStyle::y ? coeff.to_string("y") : coeff.reflect().to_string("q");
    out += "(" + c + ")" + monomial_suffix(m, *p.table());
  }
  return out;
}

std::string to_string(const RationalExpression& r, CoefficientStyle style) {
  if (r.is_polynomial()) return to_string(r.numerator(), style);
  std::string den;
  for (const auto& f : r.factors()) {
    if (!den.empty()) den += '*';
    den += "(" + to_string(f.poly, style) + ")";
    if (f.multiplicity > 1) den += "^" + std::to_string(f.multiplicity);
  }
  return "(" + to_string(r.numerator(), style) + ")/(" + den + ")";
}

LaurentPolynomial parse_polynomial(std::string_view text, const TablePtr& table, CoefficientStyle style) {
  Cursor c(text);
  LaurentPolynomial result(table);
  if (c.peek() == '0') {
    c.integer();
    if (!c.done()) c.fail("trailing input after 0");
    return result;
  }
  const std::string var = style == CoefficientStyle::y ? "y" : "q";
  do {
    c.expect('(');
    YPoly coeff = parse_ypoly(c, var);
    c.expect(')');
    if (style == CoefficientStyle::q) coeff = coeff.reflect();
    Monomial m;
    while (c.accept('*')) {
      const std::string name = c.ident();
      const int idx = table->index_of(name);
      if (idx < 0) c.fail("unknown variable '" + name + "'");
      c.expect('^');
      m.set(static_cast<std::size_t>(idx), m[static_cast<std::size_t>(idx)] + static_cast<int>(c.signed_integer()));
    }
    result += LaurentPolynomial::monomial(table, m, coeff);
  } while (c.accept('+'));
  if (!c.done()) c.fail("unexpected trailing input");
  // Only the canonical spelling is accepted: repeated or unordered variables,
  // zero exponents and unsorted or unmerged terms all reprint differently.
  std::string stripped;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
  }
  if (to_string(result, style) != stripped) throw ParseError("not in canonical form: " + stripped);
  return result;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, TablePtr table) : c_(text), table_(std::move(table)) {}

  RationalExpression parse() {
    RationalExpression r = sum();
    if (!c_.done()) c_.fail("unexpected trailing input");
    return r;
  }

 private:
  RationalExpression constant(const YPoly& v) const {
    return RationalExpression(LaurentPolynomial::constant(table_, v));
  }

  static RationalExpression inverse(const RationalExpression& r) {
    if (r.is_zero()) throw std::domain_error("division by zero in expression");
    return RationalExpression(r.expanded_denominator(), {r.numerator()});
  }

  RationalExpression sum() {
    RationalExpression acc = product();
    while (true) {
      if (c_.accept('+')) {
        acc = acc + product();
      } else if (c_.accept('-')) {
        acc = acc - product();
      } else {
        return acc;
      }
    }
  }

  RationalExpression product() {
    RationalExpression acc = unary();
    while (true) {
      if (c_.accept('*')) {
        acc = acc * unary();
      } else if (c_.accept('/')) {
        acc = acc * inverse(unary());
      } else {
        return acc;
      }
    }
  }

  RationalExpression unary() {
    if (c_.accept('-')) return -unary();
    if (c_.accept('+')) return unary();
    return power();
  }

  RationalExpression power() {
    RationalExpression base = atom();
    if (!c_.accept('^')) return base;
    const bool neg = c_.accept('-');
    if (!neg && c_.accept('(')) {
      // allow x^(-2)
      const std::int64_t e = c_.signed_integer();
      c_.expect(')');
      return raise(base, e);
    }
    const std::int64_t e = c_.integer();
    return raise(base, neg ? -e : e);
  }

  RationalExpression raise(const RationalExpression& base, std::int64_t e) const {
    RationalExpression b = e < 0 ? inverse(base) : base;
    RationalExpression acc = constant(YPoly(1));
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) acc = acc * b;
    return acc;
  }

  RationalExpression atom() {
    if (c_.accept('(')) {
      RationalExpression r = sum();
      c_.expect(')');
      return r;
    }
    if (c_.at_digit()) return constant(YPoly(c_.integer()));
    if (c_.at_ident()) {
      const std::string name = c_.ident();
      if (name == "y") return constant(YPoly::y());
      if (name == "q") return constant(YPoly{0, -1});
      if (table_->index_of(name) < 0) c_.fail("unknown variable '" + name + "'");
      return RationalExpression(LaurentPolynomial::variable(table_, name));
    }
    c_.fail("unexpected character");
  }

  Cursor c_;
  TablePtr table_;
};

}  // namespace

RationalExpression parse_expression(std::string_view text, const TablePtr& table) {
  return ExprParser(text, table).parse();
}

}  // namespace mcc
