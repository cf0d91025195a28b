#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xlag/exact/rational.hpp"

namespace xlag {

// Dense univariate polynomial with rational coefficients, lowest degree first.
// The zero polynomial has an empty coefficient vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static UPoly monomial(const Rational& c, int degree);
  // The polynomial a + b*x.
  static UPoly linear(const Rational& a, const Rational& b);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rational& lc() const { return c_.back(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& s) const;
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // Euclidean division; throws std::domain_error on division by zero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  // Quotient of an exact division; throws std::domain_error if a remainder is left.
  UPoly exact_div(const UPoly& d) const;

  UPoly monic() const;
  UPoly derivative() const;
  // p(x + c).
  UPoly taylor_shift(const Rational& c) const;

  Rational eval(const Rational& x) const;
  template <class F>
  F eval_in(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + F(*it);
    return acc;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly operator*(const Rational& s, const UPoly& p);

// Monic greatest common divisor; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace xlag
