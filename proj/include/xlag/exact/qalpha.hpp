#pragma once

#include <string>

#include "xlag/exact/upoly.hpp"

namespace xlag {

// Element of the rational function field Q(alpha), kept as num/den with a
// monic denominator and gcd(num, den) = 1.
class QAlpha {
 public:
  QAlpha() : den_(1) {}
  QAlpha(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QAlpha(long c) : QAlpha(Rational(c)) {}          // NOLINT(google-explicit-constructor)
  QAlpha(UPoly num, UPoly den);
  explicit QAlpha(UPoly num) : num_(std::move(num)), den_(1) {}

  static QAlpha alpha() { return QAlpha(UPoly::linear(0, 1)); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QAlpha operator-() const { return QAlpha(-num_, den_, Trusted{}); }
  QAlpha operator+(const QAlpha& o) const;
  QAlpha operator-(const QAlpha& o) const { return *this + (-o); }
  QAlpha operator*(const QAlpha& o) const;
  QAlpha operator/(const QAlpha& o) const { return *this * o.inv(); }
  QAlpha& operator+=(const QAlpha& o) { return *this = *this + o; }
  QAlpha& operator-=(const QAlpha& o) { return *this = *this - o; }
  QAlpha& operator*=(const QAlpha& o) { return *this = *this * o; }
  QAlpha& operator/=(const QAlpha& o) { return *this = *this / o; }
  QAlpha inv() const;
  bool operator==(const QAlpha& o) const { return num_ == o.num_ && den_ == o.den_; }

  // alpha -> alpha + c.
  QAlpha shift(const Rational& c) const;

  template <class F>
  F eval_in(const F& a) const {
    return num_.eval_in(a) / den_.eval_in(a);
  }

  std::string to_string(const std::string& var = "a") const;

 private:
  struct Trusted {};
  QAlpha(UPoly num, UPoly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}
  UPoly num_;
  UPoly den_;
};

}  // namespace xlag
