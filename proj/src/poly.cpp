#include "xlag/exact/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace xlag {

namespace {

using Rec = std::vector<UPoly>;  // polynomial in lambda with Q[alpha] coefficients

void trim(Rec& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

UPoly content(const Rec& r) {
  UPoly g;
  for (const auto& c : r) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

Rec primitive(const Rec& r) {
  UPoly c = content(r);
  if (c.is_zero() || c.is_constant()) return r;
  Rec out;
  out.reserve(r.size());
  for (const auto& x : r) out.push_back(x.exact_div(c));
  return out;
}

Rec pseudo_remainder(Rec a, const Rec& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  trim(a);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const UPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= la * b[static_cast<std::size_t>(j)];
    trim(a);
  }
  return a;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

Poly Poly::alpha() { return term(1, 1, 0); }
Poly Poly::lambda() { return term(1, 0, 1); }

Poly Poly::term(const Rational& c, int deg_alpha, int deg_lambda) {
  Poly p;
  if (c != 0) p.terms_[{deg_alpha, deg_lambda}] = c;
  return p;
}

Poly Poly::affine(const Rational& c0, const Rational& ca, const Rational& cl) {
  return term(c0, 0, 0) + term(ca, 1, 0) + term(cl, 0, 1);
}

Poly Poly::from_alpha(const UPoly& p) {
  Poly out;
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0) out.terms_[{k, 0}] = p.coeff(k);
  return out;
}

Rational Poly::coeff(int deg_alpha, int deg_lambda) const {
  auto it = terms_.find({deg_alpha, deg_lambda});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree_alpha() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int Poly::degree_lambda() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

std::pair<Poly::Exponents, Rational> Poly::leading() const {
  if (terms_.empty()) throw std::domain_error("Poly: leading term of zero");
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (std::make_pair(it->first.second, it->first.first) >
        std::make_pair(best->first.second, best->first.first))
      best = it;
  }
  return *best;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r += term(c1 * c2, e1.first + e2.first, e1.second + e2.second);
  return r;
}

Poly Poly::operator*(const Rational& s) const {
  if (s == 0) return {};
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly acc(1), base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::derivative_lambda() const {
  Poly r;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) r += term(c * e.second, e.first, e.second - 1);
  return r;
}

std::vector<UPoly> Poly::lambda_coefficients() const {
  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(std::max(degree_lambda() + 1, 0)));
  for (const auto& [e, c] : terms_) {
    auto& v = dense[static_cast<std::size_t>(e.second)];
    if (static_cast<int>(v.size()) <= e.first) v.resize(static_cast<std::size_t>(e.first) + 1);
    v[static_cast<std::size_t>(e.first)] = c;
  }
  std::vector<UPoly> out;
  out.reserve(dense.size());
  for (auto& v : dense) out.emplace_back(std::move(v));
  return out;
}

Poly Poly::from_lambda_coefficients(const std::vector<UPoly>& cs) {
  Poly out;
  for (std::size_t l = 0; l < cs.size(); ++l)
    for (int k = 0; k <= cs[l].degree(); ++k)
      if (cs[l].coeff(k) != 0) out.terms_[{k, static_cast<int>(l)}] = cs[l].coeff(k);
  return out;
}

Poly Poly::shift_alpha(const Rational& c) const {
  auto cs = lambda_coefficients();
  for (auto& p : cs) p = p.taylor_shift(c);
  return from_lambda_coefficients(cs);
}

Poly Poly::shift_lambda(const Rational& c) const {
  // Horner in lambda with Q[alpha] coefficients.
  auto cs = lambda_coefficients();
  Poly acc;
  const Poly lam_c = affine(c, 0, 1);
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * lam_c + from_alpha(*it);
  return acc;
}

Poly Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("Poly: division by zero");
  Rec a = lambda_coefficients();
  Rec b = d.lambda_coefficients();
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  Rec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    auto [qc, rem] = a.back().divmod(b.back());
    if (!rem.is_zero()) throw std::domain_error("Poly: inexact division");
    q[static_cast<std::size_t>(shift)] = qc;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(j + shift)] -= qc * b[static_cast<std::size_t>(j)];
    if (!a.back().is_zero()) throw std::domain_error("Poly: inexact division");
    trim(a);
  }
  if (!a.empty()) throw std::domain_error("Poly: inexact division");
  return from_lambda_coefficients(q);
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in descending (lambda, alpha) order.
  std::vector<std::pair<Exponents, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
    return std::make_pair(x.first.second, x.first.first) > std::make_pair(y.first.second, y.first.first);
  });
  for (auto [e, c] : ts) {
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    bool unit = (c == 1) && (e.first + e.second > 0);
    if (!unit) os << c.get_str();
    auto emit = [&](const char* var, int k) {
      if (k == 0) return;
      if (!unit) os << "*";
      unit = false;
      os << var;
      if (k > 1) os << "^" << k;
    };
    emit("a", e.first);
    emit("l", e.second);
    first = false;
  }
  return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
  auto normalize = [](const Poly& p) {
    if (p.is_zero()) return p;
    return p * (1 / p.leading().second);
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  Rec ra = a.lambda_coefficients(), rb = b.lambda_coefficients();
  UPoly ca = content(ra), cb = content(rb);
  UPoly cg = gcd(ca, cb);
  Rec pa = primitive(ra), pb = primitive(rb);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  Rec g;
  if (pb.size() == 1) {
    g = {UPoly(1)};
  } else {
    while (true) {
      Rec r = pseudo_remainder(pa, pb);
      if (r.empty()) {
        g = pb;
        break;
      }
      if (r.size() == 1) {
        g = {UPoly(1)};
        break;
      }
      pa = std::move(pb);
      pb = primitive(r);
    }
  }
  return normalize(Poly::from_lambda_coefficients(primitive(g)) * Poly::from_alpha(cg));
}

Poly rising_factorial(const Poly& base, unsigned n) {
  Poly acc(1);
  for (unsigned k = 0; k < n; ++k) acc = acc * (base + Poly(Rational(k)));
  return acc;
}

Poly falling_factorial(const Poly& base, unsigned n) {
  Poly acc(1);
  for (unsigned k = 0; k < n; ++k) acc = acc * (base - Poly(Rational(k)));
  return acc;
}

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (!(g == Poly(1))) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  const Rational s = 1 / den.leading().second;
  num_ = num * s;
  den_ = den * s;
}

RationalFunction RationalFunction::from_alpha(const QAlpha& f) {
  return RationalFunction(Poly::from_alpha(f.num()), Poly::from_alpha(f.den()));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inv(); }

RationalFunction RationalFunction::inv() const {
  if (num_.is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
  return RationalFunction(den_, num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

bool RationalFunction::equal_up_to_sign(const RationalFunction& o) const {
  Poly l = num_ * o.den_, r = o.num_ * den_;
  return l == r || l == -r;
}

RationalFunction RationalFunction::shift_alpha(const Rational& c) const {
  return RationalFunction(num_.shift_alpha(c), den_.shift_alpha(c));
}

RationalFunction RationalFunction::shift_lambda(const Rational& c) const {
  return RationalFunction(num_.shift_lambda(c), den_.shift_lambda(c));
}

std::string RationalFunction::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace xlag
