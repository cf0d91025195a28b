#include "xlag/oracle.hpp"

#include <cstdlib>
#include <optional>

#include "xlag/exact/sturm.hpp"

namespace xlag {

WronskianBuild WronskianBuild::make(const DiagramPair& pair, SolutionKind kind) {
  WronskianBuild w;
  w.pair = pair;
  w.kind = kind;
  const int d = kind == SolutionKind::first ? 1 : 0;
  const int e = kind == SolutionKind::second ? 1 : 0;
  w.rows = pair.r() + d + e;
  w.exp_rate = pair.r2() + pair.r4();
  w.alpha_power = pair.r3() + pair.r4() + e;
  w.integer_power = (pair.r1() + pair.r2() + d) * w.alpha_power;
  w.valuation = w.rows * (w.rows - 1) / 2 - w.integer_power;
  return w;
}

int omega_degree(const DiagramPair& pair) {
  const Partition mu = to_partition(shift(pair.m1, canonical_shift(pair.m1)));
  const Partition nu = to_partition(shift(pair.m2, canonical_shift(pair.m2)));
  return mu.size() + nu.size();
}

namespace {

UPoly to_upoly(const std::vector<Rational>& c) { return UPoly(c); }

}  // namespace

UPoly omega_polynomial(const DiagramPair& pair, const Rational& alpha) {
  const int deg = omega_degree(pair);
  constexpr int kGuard = 2;
  auto c = omega_plain(pair, alpha, deg + 1 + kGuard);
  for (int t = deg + 1; t < static_cast<int>(c.size()); ++t)
    if (c[static_cast<std::size_t>(t)] != 0) throw NonPolynomialError("Omega exceeds its degree for " + pair.to_string());
  c.resize(static_cast<std::size_t>(deg + 1));
  return to_upoly(c);
}

UPoly exceptional_polynomial(const DiagramPair& pair, const Rational& alpha, int n) {
  const int t1 = canonical_shift(pair.m1);
  const int t2 = canonical_shift(pair.m2);
  const int bound = omega_degree(pair) + n + std::abs(t1) + std::abs(t2) + pair.r() + 3;
  auto lp = omega_coefficients(pair, SolutionKind::first, alpha, LambdaArg<Rational>{false, Rational(n)}, bound + 1);
  std::vector<Rational> c;
  for (const auto& v : lp) c.push_back(v.is_zero() ? Rational(0) : v.coeffs()[0]);
  return to_upoly(c);
}

namespace {

// A nonzero vector in the kernel of an m x n matrix with m < n.
std::vector<Rational> kernel_vector(std::vector<std::vector<Rational>> a, std::size_t n) {
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][c];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::size_t free = 0;
  while (free < pivot_col.size() && pivot_col[free] == free) ++free;
  std::vector<Rational> x(n, Rational(0));
  x[free] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -a[r][free];
  return x;
}

// p/q with deg p, deg q <= d through the first 2d+1 samples, or nullopt when a
// held-out sample disagrees.
std::optional<QAlpha> fit_rational(const std::vector<Rational>& xs, const std::vector<Rational>& ys, int d,
                                   int held_out) {
  const std::size_t m = static_cast<std::size_t>(2 * d + 1), n = static_cast<std::size_t>(2 * d + 2);
  if (xs.size() < m + static_cast<std::size_t>(held_out)) return std::nullopt;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
  for (std::size_t i = 0; i < m; ++i) {
    Rational pw = 1;
    for (int k = 0; k <= d; ++k) {
      a[i][static_cast<std::size_t>(k)] = pw;
      a[i][static_cast<std::size_t>(d + 1 + k)] = -ys[i] * pw;
      pw *= xs[i];
    }
  }
  const std::vector<Rational> v = kernel_vector(std::move(a), n);
  const UPoly num(std::vector<Rational>(v.begin(), v.begin() + d + 1));
  const UPoly den(std::vector<Rational>(v.begin() + d + 1, v.end()));
  if (den.is_zero()) return std::nullopt;
  for (std::size_t i = m; i < m + static_cast<std::size_t>(held_out); ++i)
    if (num.eval(xs[i]) != ys[i] * den.eval(xs[i])) return std::nullopt;
  return QAlpha(num, den);
}

}  // namespace

std::vector<QAlpha> exceptional_polynomial_symbolic(const DiagramPair& pair, int alpha_offset, int n) {
  // Each coefficient lies in Q(alpha). It is rebuilt from exact evaluations at
  // sample points; elimination directly over Q(alpha) is far slower.
  constexpr int kHeldOut = 4;
  constexpr int kMaxDegree = 256;
  std::vector<Rational> xs;
  std::vector<std::vector<Rational>> values;
  std::size_t length = 0;
  auto sample_to = [&](std::size_t count) {
    while (xs.size() < count) {
      const Rational a = Rational(static_cast<long>(3 * xs.size() + 1), 3) + std::abs(alpha_offset) + 1;
      std::vector<Rational> c = exceptional_polynomial(pair, a + Rational(alpha_offset), n).coeffs();
      length = std::max(length, c.size());
      xs.push_back(a);
      values.push_back(std::move(c));
    }
  };
  sample_to(kHeldOut + 1);
  if (length == 0) return {};
  std::vector<QAlpha> out;
  for (std::size_t t = 0; t < length; ++t) {
    for (int d = 0;; d = d == 0 ? 1 : 2 * d) {
      if (d > kMaxDegree) throw TruncationError("exceptional_polynomial_symbolic: degree budget exhausted");
      sample_to(static_cast<std::size_t>(2 * d + 1 + kHeldOut));
      std::vector<Rational> ys;
      for (const auto& v : values) ys.push_back(t < v.size() ? v[t] : Rational(0));
      if (auto f = fit_rational(xs, ys, d, kHeldOut)) {
        out.push_back(*f);
        break;
      }
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

RationalFunction to_rational_function(const LambdaPoly<QAlpha>& p) {
  RationalFunction acc(0);
  const auto& cs = p.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * RationalFunction(Poly::lambda()) + RationalFunction::from_alpha(*it);
  return acc;
}

RationalFunction omega_at_zero_symbolic(const DiagramPair& pair, SolutionKind kind, int alpha_offset,
                                        const Rational& lambda_offset) {
  const QAlpha a = QAlpha::alpha() + QAlpha(Rational(alpha_offset));
  return to_rational_function(omega_at_zero(pair, kind, a, LambdaArg<QAlpha>{true, QAlpha(lambda_offset)}));
}

std::vector<RationalFunction> omega_plain_symbolic(const DiagramPair& pair, int alpha_offset, int count) {
  const QAlpha a = QAlpha::alpha() + QAlpha(Rational(alpha_offset));
  std::vector<RationalFunction> out;
  for (const auto& c : omega_plain(pair, a, count)) out.push_back(RationalFunction::from_alpha(c));
  return out;
}

bool zero_free_on_halfline(const DiagramPair& pair, const Rational& alpha) {
  // Omega_{M1,M2} at alpha + t1 + t2 is C3 times Omega_{mu,nu} at alpha, and the
  // original pair has the smaller Wronskian.
  const UPoly p = omega_polynomial(pair, alpha + canonical_shift(pair.m1) + canonical_shift(pair.m2));
  if (p.degree() < omega_degree(pair))
    throw std::domain_error("zero_free_on_halfline: leading coefficient of Omega vanishes at this alpha");
  return count_roots_from(p, Rational(0)) == 0;
}

}  // namespace xlag
