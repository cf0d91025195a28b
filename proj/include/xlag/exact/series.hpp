#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "xlag/exact/field.hpp"

namespace xlag {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_zero(long v) { return v == 0; }

// Polynomial in lambda with coefficients in a field F; used as the scalar of the
// single lambda-dependent Wronskian column so that lambda never enters a pivot.
template <class F>
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(long c) {
    if (c != 0) c_.push_back(F(c));
  }
  explicit LambdaPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }
  static LambdaPoly constant(const F& c) { return LambdaPoly(std::vector<F>{c}); }

  const std::vector<F>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  LambdaPoly operator+(const LambdaPoly& o) const {
    std::vector<F> v(std::max(c_.size(), o.c_.size()), F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return LambdaPoly(std::move(v));
  }
  LambdaPoly operator-() const {
    LambdaPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  LambdaPoly operator-(const LambdaPoly& o) const { return *this + (-o); }
  LambdaPoly operator*(const LambdaPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<F> v(c_.size() + o.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return LambdaPoly(std::move(v));
  }
  LambdaPoly& operator+=(const LambdaPoly& o) { return *this = *this + o; }
  LambdaPoly& operator-=(const LambdaPoly& o) { return *this = *this - o; }
  LambdaPoly& operator*=(const LambdaPoly& o) { return *this = *this * o; }

  friend LambdaPoly operator*(const F& s, const LambdaPoly& p) {
    if (xlag::is_zero(s)) return {};
    LambdaPoly r = p;
    for (auto& c : r.c_) c = s * c;
    r.trim();
    return r;
  }

  F eval(const F& l) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * l + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && xlag::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
bool is_zero(const LambdaPoly<F>& p) {
  return p.is_zero();
}

// Multiplication of a field element into a scalar of type C (C = F or LambdaPoly<F>).
template <class F, class C>
C scale(const F& s, const C& v) {
  return s * v;
}

// Truncated power series sum_{t < prec} c[t] x^t + O(x^prec).
template <class C>
struct Series {
  std::vector<C> c;  // c.size() == prec
  int prec = 0;

  Series() = default;
  explicit Series(int precision) : c(static_cast<std::size_t>(precision), C(0)), prec(precision) {}

  // A polynomial known exactly, stored to the given precision.
  static Series polynomial(const std::vector<C>& coeffs, int precision) {
    Series s(precision);
    for (std::size_t t = 0; t < coeffs.size() && static_cast<int>(t) < precision; ++t) s.c[t] = coeffs[t];
    return s;
  }

  // Index of the first nonzero coefficient, or prec when none is known.
  int valuation() const {
    for (int t = 0; t < prec; ++t)
      if (!is_zero(c[static_cast<std::size_t>(t)])) return t;
    return prec;
  }

  const C& operator[](int t) const { return c[static_cast<std::size_t>(t)]; }
  C& operator[](int t) { return c[static_cast<std::size_t>(t)]; }

  void truncate(int p) {
    if (p < prec) {
      prec = std::max(p, 0);
      c.resize(static_cast<std::size_t>(prec));
    }
  }
};

template <class C>
Series<C> operator+(const Series<C>& a, const Series<C>& b) {
  Series<C> r(std::min(a.prec, b.prec));
  for (int t = 0; t < r.prec; ++t) r[t] = a[t] + b[t];
  return r;
}

template <class C>
Series<C> operator-(const Series<C>& a, const Series<C>& b) {
  Series<C> r(std::min(a.prec, b.prec));
  for (int t = 0; t < r.prec; ++t) r[t] = a[t] - b[t];
  return r;
}

// Product of an F-series and a C-series; both have non-negative valuation.
template <class F, class C>
Series<C> mul(const Series<F>& a, const Series<C>& b) {
  const int va = a.valuation(), vb = b.valuation();
  int p = std::min(a.prec + vb, b.prec + va);
  Series<C> r(p);
  for (int i = va; i < a.prec && i < p; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = vb; j < b.prec && i + j < p; ++j) r[i + j] += scale(a[i], b[j]);
  }
  return r;
}

// Quotient a / b for F-series with val(a) >= val(b) = v; result has non-negative valuation.
template <class F>
Series<F> divide(const Series<F>& a, const Series<F>& b) {
  const int v = b.valuation();
  if (v >= b.prec) throw TruncationError("series division by an unresolved zero");
  const int p = std::min(a.prec, b.prec) - v;
  Series<F> q(std::max(p, 0));
  if (p <= 0) return q;
  const F inv0 = inverse(b[v]);
  // Long division on the shifted series a / x^v and b / x^v.
  std::vector<F> rem(static_cast<std::size_t>(p), F(0));
  for (int t = 0; t < p; ++t) rem[static_cast<std::size_t>(t)] = (t + v < a.prec) ? a[t + v] : F(0);
  for (int t = 0; t < p; ++t) {
    F qt = rem[static_cast<std::size_t>(t)] * inv0;
    q[t] = qt;
    if (is_zero(qt)) continue;
    for (int j = 1; t + j < p && v + j < b.prec; ++j) rem[static_cast<std::size_t>(t + j)] -= qt * b[v + j];
  }
  return q;
}

// Prefactor tag of a quasi-rational term x^{j alpha + b} e^{k x}.
struct Tag {
  int j = 0;
  int b = 0;
  int k = 0;
  auto operator<=>(const Tag&) const = default;
};

// Finite sum over tags of x^{j alpha + b} e^{k x} S(x) with S a truncated power series.
// The tag's b is kept minimal so that each S has a meaningful constant term.
template <class F>
class QuasiRationalSeries {
 public:
  QuasiRationalSeries() = default;
  QuasiRationalSeries(F alpha, int prec) : alpha_(std::move(alpha)), prec_(prec) {}

  static QuasiRationalSeries term(const F& alpha, Tag tag, Series<F> s) {
    QuasiRationalSeries q(alpha, s.prec);
    q.add_term(tag, std::move(s));
    return q;
  }

  const F& alpha() const { return alpha_; }
  // Map from (j, k) to the Laurent part (b, S).
  const std::map<std::pair<int, int>, std::pair<int, Series<F>>>& terms() const { return terms_; }
  int tag_count() const { return static_cast<int>(terms_.size()); }

  QuasiRationalSeries operator+(const QuasiRationalSeries& o) const {
    QuasiRationalSeries r = *this;
    for (const auto& [jk, bs] : o.terms_) r.add_term({jk.first, bs.first, jk.second}, bs.second);
    return r;
  }
  QuasiRationalSeries operator-() const {
    QuasiRationalSeries r = *this;
    for (auto& [jk, bs] : r.terms_)
      for (auto& c : bs.second.c) c = -c;
    return r;
  }
  QuasiRationalSeries operator-(const QuasiRationalSeries& o) const { return *this + (-o); }
  QuasiRationalSeries operator*(const QuasiRationalSeries& o) const {
    QuasiRationalSeries r(alpha_, std::min(prec_, o.prec_));
    for (const auto& [jk1, bs1] : terms_)
      for (const auto& [jk2, bs2] : o.terms_)
        r.add_term({jk1.first + jk2.first, bs1.first + bs2.first, jk1.second + jk2.second}, mul(bs1.second, bs2.second));
    return r;
  }

  // d/dx of x^{j a + b} e^{k x} S = x^{j a + b - 1} e^{k x} ((j a + b) S + k x S + x S').
  QuasiRationalSeries differentiate() const {
    QuasiRationalSeries r(alpha_, prec_);
    for (const auto& [jk, bs] : terms_) {
      const auto& [b, s] = bs;
      if (s.prec < 1) throw TruncationError("differentiation: truncation exhausted");
      Series<F> d(s.prec);
      const F base = F(static_cast<long>(jk.first)) * alpha_ + F(static_cast<long>(b));
      for (int t = 0; t < s.prec; ++t) {
        F v = (base + F(static_cast<long>(t))) * s[t];
        if (t > 0) v += F(static_cast<long>(jk.second)) * s[t - 1];
        d[t] = v;
      }
      r.add_term({jk.first, b - 1, jk.second}, std::move(d));
    }
    return r;
  }

  // Constant term of a series that is a genuine power series with tag (0, 0).
  F eval_zero() const {
    if (terms_.empty()) return F(0);
    for (const auto& [jk, bs] : terms_) {
      if (jk.first != 0 || jk.second != 0) throw std::domain_error("eval_zero: residual x^{j alpha} e^{k x} prefactor");
      const auto& [b, s] = bs;
      const int v = s.valuation();
      if (v < s.prec && b + v < 0) throw std::domain_error("eval_zero: negative power of x");
      if (b > 0) return F(0);
      if (-b >= s.prec) throw TruncationError("eval_zero: constant term beyond truncation");
      return s[-b];
    }
    return F(0);
  }

  // Coefficient of x^n in the (0,0)-tagged part.
  F coefficient(int n) const {
    auto it = terms_.find({0, 0});
    if (it == terms_.end()) return F(0);
    const auto& [b, s] = it->second;
    const int idx = n - b;
    if (idx < 0) return F(0);
    if (idx >= s.prec) throw TruncationError("coefficient beyond truncation");
    return s[idx];
  }

 private:
  // x^b S for b >= 0 as a plain series.
  static Series<F> shift_tag(int b, Series<F> s) {
    if (b <= 0) return s;
    Series<F> r(s.prec + b);
    for (int t = 0; t < s.prec; ++t) r[t + b] = s[t];
    return r;
  }

  void add_term(Tag tag, Series<F> s) {
    if (tag.b > 0) {
      s = shift_tag(tag.b, std::move(s));
      tag.b = 0;
    }
    auto key = std::make_pair(tag.j, tag.k);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::make_pair(tag.b, std::move(s)));
      return;
    }
    auto& [b0, s0] = it->second;
    // Align exponents on the smaller b.
    if (tag.b < b0) {
      s0 = shift_tag(b0 - tag.b, std::move(s0));
      b0 = tag.b;
    } else if (tag.b > b0) {
      s = shift_tag(tag.b - b0, std::move(s));
    }
    s0 = s0 + s;
  }

  F alpha_{0};
  int prec_ = 0;
  std::map<std::pair<int, int>, std::pair<int, Series<F>>> terms_;
};

// Determinant of a small square matrix over any commutative ring by Laplace expansion.
template <class T>
T laplace_determinant(const std::vector<std::vector<T>>& m, const T& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n == 1) return m[0][0];
  T acc = T(m[0][0] - m[0][0]);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    T term = T(m[0][c] * laplace_determinant(minor, one));
    acc = (c % 2 == 0) ? T(acc + term) : T(acc - term);
  }
  return acc;
}

}  // namespace xlag
