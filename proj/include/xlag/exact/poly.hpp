#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xlag/exact/qalpha.hpp"
#include "xlag/exact/upoly.hpp"

namespace xlag {

// Sparse polynomial in the two symbols alpha and lambda over Q.
// Keys are exponent pairs (deg_alpha, deg_lambda); zero coefficients are never stored.
class Poly {
 public:
  using Exponents = std::pair<int, int>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly alpha();
  static Poly lambda();
  static Poly term(const Rational& c, int deg_alpha, int deg_lambda);
  // c0 + ca*alpha + cl*lambda.
  static Poly affine(const Rational& c0, const Rational& ca, const Rational& cl);
  static Poly from_alpha(const UPoly& p);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coeff(int deg_alpha, int deg_lambda) const;
  int degree_alpha() const;
  int degree_lambda() const;
  // Leading term under the order comparing deg_lambda first, then deg_alpha.
  std::pair<Exponents, Rational> leading() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& s) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o) { return *this += -o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  Poly pow(unsigned e) const;

  // Substitutions alpha -> alpha + c and lambda -> lambda + c.
  Poly shift_alpha(const Rational& c) const;
  Poly shift_lambda(const Rational& c) const;
  // Partial derivative in the second variable.
  Poly derivative_lambda() const;

  // Coefficients in lambda as polynomials in alpha (index = lambda degree).
  std::vector<UPoly> lambda_coefficients() const;
  static Poly from_lambda_coefficients(const std::vector<UPoly>& cs);

  // Exact quotient; throws std::domain_error when the division leaves a remainder.
  Poly exact_div(const Poly& d) const;

  template <class F>
  F eval_in(const F& a, const F& l) const {
    F acc(0);
    for (const auto& [e, c] : terms_) {
      F t(c);
      for (int i = 0; i < e.first; ++i) t = t * a;
      for (int i = 0; i < e.second; ++i) t = t * l;
      acc = acc + t;
    }
    return acc;
  }

  std::string to_string() const;

 private:
  std::map<Exponents, Rational> terms_;
};

// Greatest common divisor in Q[alpha, lambda], normalized to a monic leading term.
Poly gcd(const Poly& a, const Poly& b);

// x (x+1) ... (x+n-1).
Poly rising_factorial(const Poly& base, unsigned n);
// x (x-1) ... (x-n+1).
Poly falling_factorial(const Poly& base, unsigned n);

// Ratio of two polynomials in alpha and lambda, reduced with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Poly& p) : num_(p), den_(1) {}        // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num, Poly den);
  static RationalFunction from_alpha(const QAlpha& f);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool lambda_free() const { return num_.degree_lambda() <= 0 && den_.degree_lambda() <= 0; }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction inv() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  // Equality by cross multiplication.
  bool operator==(const RationalFunction& o) const;
  bool equal_up_to_sign(const RationalFunction& o) const;

  RationalFunction shift_alpha(const Rational& c) const;
  RationalFunction shift_lambda(const Rational& c) const;

  template <class F>
  F eval_in(const F& a, const F& l) const {
    return num_.eval_in(a, l) / den_.eval_in(a, l);
  }

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace xlag
