#include "xlag/exact/upoly.hpp"

#include <sstream>
#include <stdexcept>

namespace xlag {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear(const Rational& a, const Rational& b) { return UPoly({a, b}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(v));
}

UPoly UPoly::operator*(const Rational& s) const {
  if (s == 0) return {};
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

UPoly operator*(const Rational& s, const UPoly& p) { return p * s; }

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
  if (degree() < d.degree()) return {UPoly(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(c_.size() - d.c_.size() + 1);
  const Rational inv_lc = 1 / d.lc();
  for (int k = degree() - d.degree(); k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + d.degree())] * inv_lc;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= d.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * d.c_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("UPoly: inexact division");
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * (1 / lc());
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(v));
}

UPoly UPoly::taylor_shift(const Rational& c) const {
  if (c == 0 || is_constant()) return *this;
  // Horner scheme in the shifted variable.
  UPoly acc;
  const UPoly x_plus_c = linear(c, 1);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x_plus_c + UPoly(*it);
  return acc;
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (k == 0 || c != 1) os << c.get_str();
    if (k > 0) {
      if (c != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  UPoly x = a.monic(), y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.is_constant()) return UPoly(1);
    UPoly r = x.divmod(y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace xlag
