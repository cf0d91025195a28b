#include "xlag/seeds.hpp"

namespace xlag {

namespace {

RationalFunction alpha_symbol() { return RationalFunction(Poly::alpha()); }

}  // namespace

Tag seed_tag(int kind) {
  switch (kind) {
    case 1: return {0, 0, 0};
    case 2: return {0, 0, 1};
    case 3: return {-1, 0, 0};
    case 4: return {-1, 0, 1};
    default: throw std::invalid_argument("seed_tag: kind must be 1..4");
  }
}

std::vector<RationalFunction> laguerre(int n, const LinearForm& param) {
  if (n < 0) throw std::invalid_argument("laguerre: negative degree");
  std::vector<RationalFunction> out;
  for (int k = 0; k <= n; ++k) {
    ProductForm c = rising(param + Rational(k + 1), n - k) /
                    ProductForm(factorial(static_cast<unsigned>(n - k)) * factorial(static_cast<unsigned>(k)));
    if (k % 2 == 1) c *= ProductForm(-1);
    out.push_back(c.to_rational_function());
  }
  return out;
}

QuasiRationalSeries<RationalFunction> symbolic_seed(const SeedSpec& spec, int trunc) {
  return seed<RationalFunction>(spec, alpha_symbol(), trunc);
}

QuasiRationalSeries<RationalFunction> symbolic_h(int alpha_offset, const Rational& lambda_offset, int trunc) {
  return solution_h<RationalFunction>(alpha_symbol(), RationalFunction(Poly::lambda() + Poly(lambda_offset)), trunc,
                                      alpha_offset);
}

QuasiRationalSeries<RationalFunction> symbolic_htilde(int alpha_offset, const Rational& lambda_offset, int trunc) {
  return solution_htilde<RationalFunction>(alpha_symbol(), RationalFunction(Poly::lambda() + Poly(lambda_offset)),
                                           trunc, alpha_offset);
}

XFunction x_variable() { return XFunction(Poly::lambda()); }

XFunction d_dx(const XFunction& f) {
  const Poly& n = f.num();
  const Poly& d = f.den();
  return XFunction(n.derivative_lambda() * d - n * d.derivative_lambda(), d * d);
}

XFunction x_polynomial(const std::vector<RationalFunction>& coeffs) {
  XFunction acc(0);
  const XFunction x = x_variable();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

OneStepFactorization make_factorization(const XFunction& p, const XFunction& q, const XFunction& r, const SeedSpec& phi,
                                        const XFunction& b, const RationalFunction& lambda0) {
  if (b.is_zero()) throw std::domain_error("factorization: b is identically zero");
  OneStepFactorization f{p, q, r, phi, b, lambda0, {}, {}, {}};
  const RationalFunction a = alpha_symbol() + RationalFunction(static_cast<long>(phi.alpha_offset));
  const bool negated = phi.kind >= 3;
  const int sign = (phi.kind == 2 || phi.kind == 4) ? -1 : 1;
  const XFunction L = x_polynomial(laguerre_coeffs<RationalFunction>(phi.degree, negated ? -a : a, sign));
  if (L.is_zero()) throw std::domain_error("factorization: phi vanishes identically");
  const Tag tag = seed_tag(phi.kind);
  XFunction w = d_dx(L) / L + RationalFunction(static_cast<long>(tag.k));
  if (negated) w = w - a / x_variable();
  f.w = w;
  f.bhat = p / b;
  f.what = -w - q / p + d_dx(b) / b;
  return f;
}

PartnerCoefficients partner_operator(const OneStepFactorization& f) {
  const XFunction dp = d_dx(f.p);
  const XFunction db = d_dx(f.b);
  const XFunction ddb = d_dx(db);
  const XFunction lb = db / f.b;
  PartnerCoefficients out;
  out.Q = f.q + dp - RationalFunction(2) * f.p * lb;
  const XFunction riccati = -f.p * (d_dx(f.what) + f.what * f.what) - out.Q * f.what + f.lambda0;
  const XFunction expanded = f.r + d_dx(f.q) + f.w * dp - lb * (f.q + dp) +
                             (RationalFunction(2) * lb * lb - ddb / f.b + RationalFunction(2) * d_dx(f.w)) * f.p;
  if (!(riccati == expanded))
    throw std::logic_error("partner_operator: the two forms of R disagree: " + riccati.to_string() + " vs " +
                           expanded.to_string());
  out.R = riccati;
  out.weight_over_P = (f.b * f.b).inv();
  return out;
}

XFunction apply_A(const OneStepFactorization& f, const XFunction& y) { return f.b * (d_dx(y) - f.w * y); }

XFunction apply_B(const OneStepFactorization& f, const XFunction& y) { return f.bhat * (d_dx(y) - f.what * y); }

XFunction apply_expression(const XFunction& p, const XFunction& q, const XFunction& r, const XFunction& y) {
  const XFunction dy = d_dx(y);
  return p * d_dx(dy) + q * dy + r * y;
}

OneStepFactorization type_one_factorization(int m, int alpha_offset) {
  const RationalFunction a = alpha_symbol() + RationalFunction(static_cast<long>(alpha_offset));
  const XFunction x = x_variable();
  const XFunction b = x_polynomial(laguerre_coeffs<RationalFunction>(m, a, -1));
  return make_factorization(x, a + RationalFunction(1) - x, RationalFunction(0), SeedSpec{2, m, alpha_offset}, b,
                            a + RationalFunction(static_cast<long>(m + 1)));
}

}  // namespace xlag
