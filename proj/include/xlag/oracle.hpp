#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xlag/exact/series.hpp"
#include "xlag/maya.hpp"
#include "xlag/seeds.hpp"

namespace xlag {

enum class SolutionKind { plain, first, second };

// Shape of the prefactored Wronskian
//   e^{-(r2+r4) x} x^{(alpha + r1 + r2 + d)(r3 + r4 + e)} Wr[f_1, ..., f_r, (h | h~)]
// with (d, e) = (0, 0), (1, 0), (0, 1) for plain, first kind, second kind.
struct WronskianBuild {
  DiagramPair pair;
  SolutionKind kind = SolutionKind::plain;
  int rows = 0;            // matrix size
  int exp_rate = 0;        // r2 + r4
  int alpha_power = 0;     // r3 + r4 + e
  int integer_power = 0;   // (r1 + r2 + d)(r3 + r4 + e)
  int valuation = 0;       // rows (rows - 1) / 2 - integer_power

  static WronskianBuild make(const DiagramPair& pair, SolutionKind kind);
};

class NonPolynomialError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The lambda argument of the appended solution: Lambda + offset when symbolic
// (Lambda the formal variable of LambdaPoly), or the fixed value `offset`.
template <class F>
struct LambdaArg {
  bool symbolic = true;
  F offset{0};
};

namespace detail {

template <class F>
struct Column {
  int j = 0;  // x^{j alpha}
  int k = 0;  // e^{k x}
  Series<F> g;
};

// Rows x^i x^{-j alpha} e^{-k x} D^i (x^{j alpha} e^{k x} g), i < rows.
template <class C, class F>
std::vector<Series<C>> scaled_derivatives(int j, int k, Series<C> e, const F& alpha, int rows) {
  std::vector<Series<C>> out;
  out.reserve(static_cast<std::size_t>(rows));
  const F ja = F(static_cast<long>(j)) * alpha;
  for (int i = 0; i < rows; ++i) {
    if (i > 0) {
      const Series<C>& prev = out.back();
      Series<C> next(prev.prec);
      for (int t = 0; t < prev.prec; ++t) {
        C v = scale(ja + F(static_cast<long>(t - (i - 1))), prev[t]);
        if (k != 0 && t > 0) v = v + scale(F(static_cast<long>(k)), prev[t - 1]);
        next[t] = v;
      }
      e = next;
    }
    out.push_back(e);
  }
  return out;
}

template <class F>
std::vector<Column<F>> seed_columns(const DiagramPair& pair, const F& alpha, int prec) {
  std::vector<Column<F>> cols;
  auto add = [&](int j, int k, const std::vector<F>& c) { cols.push_back({j, k, Series<F>::polynomial(c, prec)}); };
  for (int n : pair.m1.included) add(0, 0, laguerre_coeffs<F>(n, alpha, 1));
  for (int m : pair.m2.included) add(0, 1, laguerre_coeffs<F>(m, alpha, -1));
  for (int mp : pair.m2.excluded) add(-1, 0, laguerre_coeffs<F>(mp, -alpha, 1));
  for (int np : pair.m1.excluded) add(-1, 1, laguerre_coeffs<F>(np, -alpha, -1));
  return cols;
}

// M(a, b, x) with a = -(Lambda + s) (symbolic) or a = -s (numeric) as a LambdaPoly series.
template <class F>
Series<LambdaPoly<F>> lambda_hypergeometric(const LambdaArg<F>& lam, const F& extra_a, const F& b, int prec) {
  using LP = LambdaPoly<F>;
  Series<LP> s(prec);
  if (prec == 0) return s;
  const LP a = lam.symbolic ? LP(std::vector<F>{-lam.offset - extra_a, F(-1)}) : LP::constant(-lam.offset - extra_a);
  LP c = LP::constant(F(1));
  s[0] = c;
  for (int t = 0; t + 1 < prec; ++t) {
    const F den = (b + F(static_cast<long>(t))) * F(static_cast<long>(t + 1));
    if (is_zero(den)) throw std::domain_error("hypergeometric series: lower parameter is a non-positive integer");
    c = inverse(den) * (c * (a + LP::constant(F(static_cast<long>(t)))));
    s[t + 1] = c;
  }
  return s;
}

struct ZeroToOrder {
  int order;
};

// Determinant of a matrix whose first n-1 columns are F-series and whose last column
// is a C-series. Throws ZeroToOrder when a pivot column is unresolved.
template <class F, class C>
Series<C> series_determinant(std::vector<std::vector<Series<F>>> a, std::vector<Series<C>> last) {
  const std::size_t n = last.size();
  bool negate = false;
  Series<F> pivots;
  bool have_pivot = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = k;
    int best_v = a[k][k].valuation();
    int min_prec = a[k][k].prec;
    for (std::size_t i = k + 1; i < n; ++i) {
      const int v = a[i][k].valuation();
      min_prec = std::min(min_prec, a[i][k].prec);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    if (best_v >= a[best][k].prec) throw ZeroToOrder{min_prec};
    if (best != k) {
      std::swap(a[best], a[k]);
      std::swap(last[best], last[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].valuation() >= a[i][k].prec) {
        // Entry is zero to its known order; the multiplier is O(x^{prec - v}).
        const int mp = a[i][k].prec - best_v;
        if (mp <= 0) throw ZeroToOrder{min_prec};
        Series<F> m(mp);
        for (std::size_t c = k + 1; c + 1 < n; ++c) a[i][c] = a[i][c] - mul(m, a[k][c]);
        last[i] = last[i] - mul(m, last[k]);
        continue;
      }
      const Series<F> m = divide(a[i][k], a[k][k]);
      for (std::size_t c = k + 1; c + 1 < n; ++c) a[i][c] = a[i][c] - mul(m, a[k][c]);
      last[i] = last[i] - mul(m, last[k]);
    }
    pivots = have_pivot ? mul(pivots, a[k][k]) : a[k][k];
    have_pivot = true;
  }
  Series<C> det = have_pivot ? mul(pivots, last[n - 1]) : last[n - 1];
  if (negate)
    for (auto& c : det.c) c = -c;
  return det;
}

}  // namespace detail

// Coefficients of x^0 .. x^{count-1} of Omega_{M1,M2}, Omega[h^alpha(x, lambda)] or
// Omega[h~^alpha(x, lambda)], with lambda described by `lam`. Plain results are
// constant LambdaPolys. Throws NonPolynomialError if terms below x^0 survive.
// `min_prec` raises the starting series truncation order.
template <class F>
std::vector<LambdaPoly<F>> omega_coefficients(const DiagramPair& pair, SolutionKind kind, const F& alpha,
                                              const LambdaArg<F>& lam, int count, int min_prec = 0) {
  using LP = LambdaPoly<F>;
  const WronskianBuild wb = WronskianBuild::make(pair, kind);
  const int rows = wb.rows;
  if (rows == 0) {
    std::vector<LP> out(static_cast<std::size_t>(count), LP());
    if (count > 0) out[0] = LP::constant(F(1));
    return out;
  }
  const int need = wb.valuation + count;
  int prec = std::max(need + rows + 2, min_prec);
  for (int attempt = 0; attempt < 8; ++attempt, prec *= 2) {
    auto cols = detail::seed_columns(pair, alpha, prec);
    Series<LP> last_g;
    int last_j = 0;
    if (kind == SolutionKind::plain) {
      const auto& c = cols.back();
      last_g = Series<LP>(prec);
      for (int t = 0; t < prec; ++t) last_g[t] = LP::constant(c.g[t]);
      last_j = c.j;
    } else if (kind == SolutionKind::first) {
      last_g = detail::lambda_hypergeometric<F>(lam, F(0), alpha + F(1), prec);
    } else {
      last_g = detail::lambda_hypergeometric<F>(lam, alpha, F(1) - alpha, prec);
      last_j = -1;
    }
    int last_k = kind == SolutionKind::plain ? cols.back().k : 0;
    if (kind == SolutionKind::plain) cols.pop_back();

    std::vector<std::vector<Series<F>>> a(static_cast<std::size_t>(rows));
    for (const auto& c : cols) {
      auto d = detail::scaled_derivatives(c.j, c.k, c.g, alpha, rows);
      for (int i = 0; i < rows; ++i) a[static_cast<std::size_t>(i)].push_back(std::move(d[static_cast<std::size_t>(i)]));
    }
    auto last = detail::scaled_derivatives(last_j, last_k, last_g, alpha, rows);

    Series<LP> det;
    try {
      det = detail::series_determinant(std::move(a), std::move(last));
    } catch (const detail::ZeroToOrder& z) {
      if (z.order >= need) return std::vector<LP>(static_cast<std::size_t>(count), LP());
      continue;
    }
    if (det.prec < need) continue;
    for (int t = 0; t < wb.valuation; ++t)
      if (!is_zero(det[t])) throw NonPolynomialError("Wronskian has a surviving term below x^0 for " + pair.to_string());
    std::vector<LP> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) out.push_back(det[wb.valuation + t]);
    return out;
  }
  throw TruncationError("omega: precision budget exhausted for " + pair.to_string());
}

// Convenience wrappers over a numeric or symbolic alpha.
template <class F>
std::vector<F> omega_plain(const DiagramPair& pair, const F& alpha, int count) {
  auto lp = omega_coefficients(pair, SolutionKind::plain, alpha, LambdaArg<F>{false, F(0)}, count);
  std::vector<F> out;
  for (const auto& c : lp) out.push_back(c.is_zero() ? F(0) : c.coeffs()[0]);
  return out;
}

template <class F>
LambdaPoly<F> omega_at_zero(const DiagramPair& pair, SolutionKind kind, const F& alpha, const LambdaArg<F>& lam,
                            int min_prec = 0) {
  return omega_coefficients(pair, kind, alpha, lam, 1, min_prec)[0];
}

// Degree of Omega_{M1,M2} from the canonical partitions.
int omega_degree(const DiagramPair& pair);

// Exact Omega_{M1,M2} at a rational alpha, lowest degree first.
UPoly omega_polynomial(const DiagramPair& pair, const Rational& alpha);

// Omega_{M1,M2}[h^alpha(x, n)] at an integer lambda = n; zero polynomial for deleted states.
UPoly exceptional_polynomial(const DiagramPair& pair, const Rational& alpha, int n);
// Same with symbolic alpha + alpha_offset; trailing zero coefficients trimmed.
std::vector<QAlpha> exceptional_polynomial_symbolic(const DiagramPair& pair, int alpha_offset, int n);

// Symbolic alpha: coefficients are rational functions of alpha and lambda.
RationalFunction to_rational_function(const LambdaPoly<QAlpha>& p);
RationalFunction omega_at_zero_symbolic(const DiagramPair& pair, SolutionKind kind, int alpha_offset,
                                        const Rational& lambda_offset);
std::vector<RationalFunction> omega_plain_symbolic(const DiagramPair& pair, int alpha_offset, int count);

// True iff Omega^alpha_{mu,nu}(x), the polynomial of the canonical partitions at
// parameter alpha, has no root in [0, inf), by an exact Sturm count. The weight
// denominator Omega_{M1,M2}^alpha is Omega_{mu,nu} at alpha - t1 - t2 instead; test
// it with omega_polynomial and count_roots_from.
bool zero_free_on_halfline(const DiagramPair& pair, const Rational& alpha);

}  // namespace xlag
