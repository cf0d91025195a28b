#pragma once

#include <stdexcept>
#include <vector>

#include "xlag/exact/linear.hpp"
#include "xlag/exact/series.hpp"

namespace xlag {

// One of the four quasi-rational seed families
//   1: L_n^a(x)   2: e^x L_n^a(-x)   3: x^{-a} L_n^{-a}(x)   4: e^x x^{-a} L_n^{-a}(-x)
// with a = alpha + alpha_offset.
struct SeedSpec {
  int kind = 1;
  int degree = 0;
  int alpha_offset = 0;
};

// Prefactor tag x^{j alpha} e^{k x} of a seed kind (b = 0).
Tag seed_tag(int kind);

// Coefficients of L_n^{param}(sign * x), lowest degree first, from the explicit sum
//   L_n^a(x) = sum_k (-1)^k (a+k+1)^{(n-k)} x^k / ((n-k)! k!).
template <class F>
std::vector<F> laguerre_coeffs(int n, const F& param, int sign = 1) {
  if (n < 0) throw std::invalid_argument("laguerre: negative degree");
  std::vector<F> c(static_cast<std::size_t>(n + 1), F(0));
  F prod(1);
  for (int k = n; k >= 0; --k) {
    if (k < n) prod = prod * (param + F(static_cast<long>(k + 1)));
    F v = prod / (from_rational<F>(factorial(static_cast<unsigned>(n - k))) * from_rational<F>(factorial(static_cast<unsigned>(k))));
    if (k % 2 == 1 && sign > 0) v = -v;
    c[static_cast<std::size_t>(k)] = v;
  }
  return c;
}

// Symbolic L_n^{param}(x) with param affine in alpha (and possibly lambda).
std::vector<RationalFunction> laguerre(int n, const LinearForm& param);

template <class F>
QuasiRationalSeries<F> seed(const SeedSpec& spec, const F& alpha, int trunc) {
  if (spec.kind < 1 || spec.kind > 4) throw std::invalid_argument("seed: kind must be 1..4");
  const F a = alpha + F(static_cast<long>(spec.alpha_offset));
  const bool negated_param = spec.kind >= 3;
  const int sign = (spec.kind == 2 || spec.kind == 4) ? -1 : 1;
  Tag tag = seed_tag(spec.kind);
  if (negated_param) tag.b = -spec.alpha_offset;
  auto coeffs = laguerre_coeffs<F>(spec.degree, negated_param ? -a : a, sign);
  return QuasiRationalSeries<F>::term(alpha, tag, Series<F>::polynomial(coeffs, trunc));
}

// Taylor coefficients of M(a, b, x) = 1F1(a; b; x) up to x^{trunc-1}.
template <class F>
std::vector<F> hypergeometric_coeffs(const F& a, const F& b, int trunc) {
  std::vector<F> c;
  if (trunc <= 0) return c;
  c.push_back(F(1));
  for (int t = 0; t + 1 < trunc; ++t) {
    const F den = (b + F(static_cast<long>(t))) * F(static_cast<long>(t + 1));
    if (is_zero(den)) throw std::domain_error("hypergeometric series: lower parameter is a non-positive integer");
    c.push_back(c.back() * (a + F(static_cast<long>(t))) / den);
  }
  return c;
}

// h^{a}(x, l) = M(-l, a+1, x) with a = alpha + alpha_offset.
template <class F>
QuasiRationalSeries<F> solution_h(const F& alpha, const F& lambda, int trunc, int alpha_offset = 0) {
  const F a = alpha + F(static_cast<long>(alpha_offset));
  auto c = hypergeometric_coeffs<F>(-lambda, a + F(1), trunc);
  return QuasiRationalSeries<F>::term(alpha, Tag{0, 0, 0}, Series<F>::polynomial(c, trunc));
}

// h~^{a}(x, l) = x^{-a} M(-l-a, 1-a, x) with a = alpha + alpha_offset.
template <class F>
QuasiRationalSeries<F> solution_htilde(const F& alpha, const F& lambda, int trunc, int alpha_offset = 0) {
  const F a = alpha + F(static_cast<long>(alpha_offset));
  auto c = hypergeometric_coeffs<F>(-lambda - a, F(1) - a, trunc);
  return QuasiRationalSeries<F>::term(alpha, Tag{-1, -alpha_offset, 0}, Series<F>::polynomial(c, trunc));
}

// Symbolic alpha and lambda; used by tests and reports.
QuasiRationalSeries<RationalFunction> symbolic_seed(const SeedSpec& spec, int trunc);
QuasiRationalSeries<RationalFunction> symbolic_h(int alpha_offset, const Rational& lambda_offset, int trunc);
QuasiRationalSeries<RationalFunction> symbolic_htilde(int alpha_offset, const Rational& lambda_offset, int trunc);

// ---------------------------------------------------------------------------
// One-step rational Darboux factorization.
//
// Rational functions of x with alpha-dependent coefficients are carried as
// RationalFunction values whose second variable stands for x.
using XFunction = RationalFunction;

XFunction x_variable();
XFunction d_dx(const XFunction& f);
// Polynomial in x from coefficients (lowest degree first) in alpha.
XFunction x_polynomial(const std::vector<RationalFunction>& coeffs);

// l[y] = p y'' + q y' + r y factored as l = B A + lambda0 with
//   A[y] = b (y' - w y),  B[y] = bhat (y' - what y),
//   w = phi'/phi,  bhat = p / b,  what = -w - q/p + b'/b.
struct OneStepFactorization {
  XFunction p, q, r;
  SeedSpec phi;
  XFunction b;
  RationalFunction lambda0;
  XFunction w, bhat, what;
};

OneStepFactorization make_factorization(const XFunction& p, const XFunction& q, const XFunction& r, const SeedSpec& phi,
                                        const XFunction& b, const RationalFunction& lambda0);

// Partner L = A B + lambda0 = p y'' + Q y' + R y with weight P / b^2, where P is
// the symmetry factor of l; `weight_over_P` holds 1 / b^2.
struct PartnerCoefficients {
  XFunction Q, R;
  XFunction weight_over_P;
};

// Computes R by both the Riccati form and the expanded form; throws
// std::logic_error if they disagree.
PartnerCoefficients partner_operator(const OneStepFactorization& f);

XFunction apply_A(const OneStepFactorization& f, const XFunction& y);
XFunction apply_B(const OneStepFactorization& f, const XFunction& y);
XFunction apply_expression(const XFunction& p, const XFunction& q, const XFunction& r, const XFunction& y);

// The factorization -l^a = B A + (a + m + 1) with b = L_m^a(-x), phi = e^x L_m^a(-x),
// where a = alpha + alpha_offset.
OneStepFactorization type_one_factorization(int m, int alpha_offset = 0);

}  // namespace xlag
