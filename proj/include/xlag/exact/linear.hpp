#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "xlag/exact/poly.hpp"

namespace xlag {

// c0 + ca*alpha + cl*lambda.
struct LinearForm {
  Rational c0, ca, cl;

  static LinearForm constant(const Rational& c) { return {c, 0, 0}; }
  static LinearForm alpha(const Rational& offset = 0) { return {offset, 1, 0}; }
  static LinearForm lambda(const Rational& offset = 0) { return {offset, 0, 1}; }

  bool is_constant() const { return ca == 0 && cl == 0; }
  bool has_lambda() const { return cl != 0; }

  LinearForm operator+(const LinearForm& o) const { return {c0 + o.c0, ca + o.ca, cl + o.cl}; }
  LinearForm operator-(const LinearForm& o) const { return {c0 - o.c0, ca - o.ca, cl - o.cl}; }
  LinearForm operator-() const { return {-c0, -ca, -cl}; }
  LinearForm operator+(const Rational& k) const { return {c0 + k, ca, cl}; }
  LinearForm operator-(const Rational& k) const { return {c0 - k, ca, cl}; }
  LinearForm operator*(const Rational& k) const { return {c0 * k, ca * k, cl * k}; }

  // alpha -> alpha + k and lambda -> lambda + k.
  LinearForm shift_alpha(const Rational& k) const { return {c0 + ca * k, ca, cl}; }
  LinearForm shift_lambda(const Rational& k) const { return {c0 + cl * k, ca, cl}; }
  // alpha -> a and lambda -> l for affine a, l.
  LinearForm substitute(const LinearForm& a, const LinearForm& l) const { return constant(c0) + a * ca + l * cl; }

  template <class F>
  F eval_in(const F& a, const F& l) const {
    return F(c0) + F(ca) * a + F(cl) * l;
  }

  Poly to_poly() const { return Poly::affine(c0, ca, cl); }
  std::string to_string() const;

  bool operator==(const LinearForm& o) const { return c0 == o.c0 && ca == o.ca && cl == o.cl; }
  bool operator<(const LinearForm& o) const;
};

// Rational constant times a product of integer powers of normalized linear forms.
// Forms are stored with leading coefficient 1 (lambda, then alpha, then constant),
// so two products are equal iff their constants and factor maps agree.
class ProductForm {
 public:
  ProductForm() = default;
  ProductForm(const Rational& c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
  ProductForm(long c) : constant_(c) {}              // NOLINT(google-explicit-constructor)
  static ProductForm of(const LinearForm& f, int exponent = 1);

  const Rational& constant() const { return constant_; }
  const std::map<LinearForm, int>& factors() const { return factors_; }
  bool is_zero() const { return constant_ == 0; }
  bool lambda_free() const;

  ProductForm operator*(const ProductForm& o) const;
  ProductForm operator/(const ProductForm& o) const;
  ProductForm& operator*=(const ProductForm& o) { return *this = *this * o; }
  ProductForm& operator/=(const ProductForm& o) { return *this = *this / o; }
  ProductForm inv() const;
  ProductForm pow(int e) const;

  ProductForm shift_alpha(const Rational& k) const;
  ProductForm shift_lambda(const Rational& k) const;
  ProductForm substitute(const LinearForm& a, const LinearForm& l) const;

  // Splits off the factors containing lambda.
  ProductForm lambda_part() const;
  ProductForm alpha_part() const;

  bool operator==(const ProductForm& o) const { return constant_ == o.constant_ && factors_ == o.factors_; }
  bool equal_up_to_sign(const ProductForm& o) const {
    return factors_ == o.factors_ && abs(constant_) == abs(o.constant_);
  }

  template <class F>
  F eval_in(const F& a, const F& l) const {
    F num(constant_), den(1);
    for (const auto& [f, e] : factors_) {
      F v = f.eval_in(a, l);
      for (int i = 0; i < (e > 0 ? e : -e); ++i) (e > 0 ? num : den) *= v;
    }
    return num / den;
  }

  RationalFunction to_rational_function() const;
  std::string to_string() const;

 private:
  void mul_factor(const LinearForm& f, int e);
  void scale_constant(const Rational& c, int e);
  Rational constant_ = 1;
  std::map<LinearForm, int> factors_;
};

// Products of shifted linear forms.
ProductForm rising(const LinearForm& x, int n);   // x (x+1) ... (x+n-1)
ProductForm falling(const LinearForm& x, int n);  // x (x-1) ... (x-n+1)

}  // namespace xlag
