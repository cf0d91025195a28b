#include "xlag/exact/linear.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace xlag {

namespace {

std::string signed_term(const Rational& c, const std::string& var, bool first) {
  if (c == 0) return "";
  std::ostringstream os;
  Rational m = abs(c);
  if (first)
    os << (c < 0 ? "-" : "");
  else
    os << (c < 0 ? " - " : " + ");
  if (var.empty())
    os << m.get_str();
  else if (m == 1)
    os << var;
  else
    os << m.get_str() << "*" << var;
  return os.str();
}

}  // namespace

std::string LinearForm::to_string() const {
  std::string s;
  for (auto [c, v] : {std::pair{cl, std::string("l")}, std::pair{ca, std::string("a")}, std::pair{c0, std::string()}}) {
    s += signed_term(c, v, s.empty());
  }
  return s.empty() ? "0" : s;
}

bool LinearForm::operator<(const LinearForm& o) const {
  if (cl != o.cl) return cl < o.cl;
  if (ca != o.ca) return ca < o.ca;
  return c0 < o.c0;
}

ProductForm ProductForm::of(const LinearForm& f, int exponent) {
  ProductForm p;
  p.mul_factor(f, exponent);
  return p;
}

void ProductForm::scale_constant(const Rational& c, int e) {
  for (int i = 0; i < (e > 0 ? e : -e); ++i) {
    if (e > 0)
      constant_ *= c;
    else
      constant_ /= c;
  }
}

void ProductForm::mul_factor(const LinearForm& f, int e) {
  if (e == 0) return;
  if (f.is_constant()) {
    if (f.c0 == 0) {
      if (e < 0) throw std::domain_error("ProductForm: division by zero factor");
      constant_ = 0;
      factors_.clear();
      return;
    }
    scale_constant(f.c0, e);
    return;
  }
  if (constant_ == 0) return;
  const Rational lead = f.cl != 0 ? f.cl : f.ca;
  LinearForm g{f.c0 / lead, f.ca / lead, f.cl / lead};
  scale_constant(lead, e);
  auto it = factors_.find(g);
  if (it == factors_.end()) {
    factors_.emplace(g, e);
  } else {
    it->second += e;
    if (it->second == 0) factors_.erase(it);
  }
}

bool ProductForm::lambda_free() const {
  for (const auto& [f, e] : factors_)
    if (f.has_lambda()) return false;
  return true;
}

ProductForm ProductForm::operator*(const ProductForm& o) const {
  if (is_zero() || o.is_zero()) return ProductForm(0);
  ProductForm r = *this;
  r.constant_ *= o.constant_;
  for (const auto& [f, e] : o.factors_) {
    auto it = r.factors_.find(f);
    if (it == r.factors_.end()) {
      r.factors_.emplace(f, e);
    } else {
      it->second += e;
      if (it->second == 0) r.factors_.erase(it);
    }
  }
  return r;
}

ProductForm ProductForm::inv() const {
  if (is_zero()) throw std::domain_error("ProductForm: inverse of zero");
  ProductForm r;
  r.constant_ = 1 / constant_;
  for (const auto& [f, e] : factors_) r.factors_.emplace(f, -e);
  return r;
}

ProductForm ProductForm::operator/(const ProductForm& o) const { return *this * o.inv(); }

ProductForm ProductForm::pow(int e) const {
  if (e == 0) return ProductForm(1);
  ProductForm base = e > 0 ? *this : inv();
  ProductForm r(1);
  for (int i = 0; i < (e > 0 ? e : -e); ++i) r *= base;
  return r;
}

ProductForm ProductForm::shift_alpha(const Rational& k) const {
  ProductForm r(constant_);
  for (const auto& [f, e] : factors_) r.mul_factor(f.shift_alpha(k), e);
  return r;
}

ProductForm ProductForm::shift_lambda(const Rational& k) const {
  ProductForm r(constant_);
  for (const auto& [f, e] : factors_) r.mul_factor(f.shift_lambda(k), e);
  return r;
}

ProductForm ProductForm::substitute(const LinearForm& a, const LinearForm& l) const {
  ProductForm r(constant_);
  for (const auto& [f, e] : factors_) r.mul_factor(f.substitute(a, l), e);
  return r;
}

ProductForm ProductForm::lambda_part() const {
  ProductForm r;
  for (const auto& [f, e] : factors_)
    if (f.has_lambda()) r.factors_.emplace(f, e);
  return r;
}

ProductForm ProductForm::alpha_part() const {
  ProductForm r(constant_);
  for (const auto& [f, e] : factors_)
    if (!f.has_lambda()) r.factors_.emplace(f, e);
  return r;
}

RationalFunction ProductForm::to_rational_function() const {
  if (is_zero()) return RationalFunction(0);
  Poly num(constant_), den(1);
  for (const auto& [f, e] : factors_) {
    Poly p = f.to_poly().pow(static_cast<unsigned>(e > 0 ? e : -e));
    (e > 0 ? num : den) = (e > 0 ? num : den) * p;
  }
  // Distinct monic linear forms are pairwise coprime, so no gcd is needed.
  return RationalFunction(num, den);
}

std::string ProductForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream num, den;
  int nd = 0;
  for (const auto& [f, e] : factors_) {
    std::ostringstream t;
    t << "(" << f.to_string() << ")";
    if ((e > 0 ? e : -e) > 1) t << "^" << (e > 0 ? e : -e);
    if (e > 0) {
      num << t.str();
    } else {
      den << t.str();
      ++nd;
    }
  }
  std::string head = constant_ == 1 && !num.str().empty() ? "" : constant_ == -1 && !num.str().empty() ? "-" : constant_.get_str();
  std::string s = head + num.str();
  if (nd > 0) s += "/" + (nd > 1 ? "(" + den.str() + ")" : den.str());
  return s;
}

ProductForm rising(const LinearForm& x, int n) {
  if (n < 0) throw std::domain_error("rising: negative length");
  ProductForm p(1);
  for (int k = 0; k < n; ++k) p *= ProductForm::of(x + Rational(k));
  return p;
}

ProductForm falling(const LinearForm& x, int n) {
  if (n < 0) throw std::domain_error("falling: negative length");
  ProductForm p(1);
  for (int k = 0; k < n; ++k) p *= ProductForm::of(x - Rational(k));
  return p;
}

}  // namespace xlag
