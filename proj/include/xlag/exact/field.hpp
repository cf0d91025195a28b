#pragma once

#include <stdexcept>

#include "xlag/exact/modp.hpp"
#include "xlag/exact/poly.hpp"
#include "xlag/exact/qalpha.hpp"
#include "xlag/exact/rational.hpp"

// Uniform access to the scalar fields used by the generic series and
// determinant code: Rational, ModP, QAlpha and RationalFunction.
namespace xlag {

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ModP& m) { return m.is_zero(); }
inline bool is_zero(const QAlpha& f) { return f.is_zero(); }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

inline Rational inverse(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("inverse of zero");
  return 1 / q;
}
inline ModP inverse(const ModP& m) { return m.inv(); }
inline QAlpha inverse(const QAlpha& f) { return f.inv(); }
inline RationalFunction inverse(const RationalFunction& f) { return f.inv(); }

template <class F>
F from_rational(const Rational& q);
template <>
inline Rational from_rational<Rational>(const Rational& q) {
  return q;
}
template <>
inline ModP from_rational<ModP>(const Rational& q) {
  return ModP(q);
}
template <>
inline QAlpha from_rational<QAlpha>(const Rational& q) {
  return QAlpha(q);
}

template <>
inline RationalFunction from_rational<RationalFunction>(const Rational& q) {
  return RationalFunction(q);
}

}  // namespace xlag
