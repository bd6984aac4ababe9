#include "mcc/ypoly.hpp"

#include <algorithm>
#include <cstdlib>

namespace mcc {

YPoly::YPoly(std::int64_t c) {
  if (c != 0) c_.push_back(c);
}

YPoly::YPoly(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) { trim(); }

YPoly::YPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

YPoly YPoly::power(int k) {
  if (k < 0) throw std::invalid_argument("negative power of y");
  std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  return YPoly(std::move(c));
}

void YPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t YPoly::evaluate(std::int64_t at) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, at), *it);
  return acc;
}

YPoly YPoly::reflect() const {
  YPoly r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

YPoly YPoly::operator-() const {
  YPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

YPoly& YPoly::operator+=(const YPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  trim();
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) { return *this += -o; }

YPoly operator*(const YPoly& a, const YPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
  }
  return YPoly(std::move(c));
}

bool operator<(const YPoly& a, const YPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::optional<YPoly> YPoly::exact_div(const YPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return YPoly{};
  if (degree() < d.degree()) return std::nullopt;
  std::vector<std::int64_t> rem = c_;
  std::vector<std::int64_t> quo(c_.size() - d.c_.size() + 1, 0);
  for (int i = static_cast<int>(quo.size()) - 1; i >= 0; --i) {
    const std::int64_t top = rem[static_cast<std::size_t>(i) + d.c_.size() - 1];
    if (top % d.leading() != 0) return std::nullopt;
    const std::int64_t q = top / d.leading();
    quo[static_cast<std::size_t>(i)] = q;
    for (std::size_t j = 0; j < d.c_.size(); ++j) {
      auto& slot = rem[static_cast<std::size_t>(i) + j];
      slot = checked_add(slot, -checked_mul(q, d.c_[j]));
    }
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t x) { return x != 0; })) return std::nullopt;
  return YPoly(std::move(quo));
}

std::string YPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const std::int64_t c = c_[i];
    if (c == 0) continue;
    if (!out.empty() && c > 0) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c == -1) {
      out += '-';
    } else if (c != 1) {
      out += std::to_string(c) + "*";
    }
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace mcc
