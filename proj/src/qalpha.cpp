#include "xlag/exact/qalpha.hpp"

#include <stdexcept>

namespace xlag {

QAlpha::QAlpha(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("QAlpha: zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (!den.is_constant()) {
    UPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  Rational s = 1 / den.lc();
  num_ = num * s;
  den_ = den * s;
}

QAlpha QAlpha::operator+(const QAlpha& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_.is_constant() && o.den_.is_constant()) return QAlpha(num_ + o.num_, UPoly(1), Trusted{});
  if (den_ == o.den_) return QAlpha(num_ + o.num_, den_);
  // With g = gcd(b, d), any common factor of the new numerator and b d / g divides g.
  const UPoly g = gcd(den_, o.den_);
  if (g.is_constant()) return QAlpha(num_ * o.den_ + o.num_ * den_, den_ * o.den_, Trusted{});
  const UPoly db = den_.exact_div(g), dd = o.den_.exact_div(g);
  UPoly num = num_ * dd + o.num_ * db;
  if (num.is_zero()) return {};
  UPoly den = den_ * dd;
  const UPoly h = gcd(num, g);
  if (!h.is_constant()) {
    num = num.exact_div(h);
    den = den.exact_div(h);
  }
  const Rational s = 1 / den.lc();
  return QAlpha(num * s, den * s, Trusted{});
}

QAlpha QAlpha::operator*(const QAlpha& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (den_.is_constant() && o.den_.is_constant()) return QAlpha(num_ * o.num_, UPoly(1), Trusted{});
  // Cross-cancel before multiplying to keep degrees small.
  UPoly g1 = gcd(num_, o.den_);
  UPoly g2 = gcd(o.num_, den_);
  UPoly n1 = g1.is_constant() ? num_ : num_.exact_div(g1);
  UPoly d2 = g1.is_constant() ? o.den_ : o.den_.exact_div(g1);
  UPoly n2 = g2.is_constant() ? o.num_ : o.num_.exact_div(g2);
  UPoly d1 = g2.is_constant() ? den_ : den_.exact_div(g2);
  UPoly den = d1 * d2;
  Rational s = 1 / den.lc();
  return QAlpha(n1 * n2 * s, den * s, Trusted{});
}

QAlpha QAlpha::inv() const {
  if (is_zero()) throw std::domain_error("QAlpha: inverse of zero");
  Rational s = 1 / num_.lc();
  return QAlpha(den_ * s, num_ * s, Trusted{});
}

QAlpha QAlpha::shift(const Rational& c) const {
  return QAlpha(num_.taylor_shift(c), den_.taylor_shift(c), Trusted{});
}

std::string QAlpha::to_string(const std::string& var) const {
  if (den_.is_constant()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace xlag
