#pragma once

#include <vector>

#include "xlag/exact/upoly.hpp"

namespace xlag {

// Sturm chain p, p', -rem(p, p'), ... (exact, over Q).
std::vector<UPoly> sturm_chain(const UPoly& p);

// Sign changes of the chain at x, and at +infinity.
int sign_variations_at(const std::vector<UPoly>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<UPoly>& chain);

// Number of distinct real roots in [a, +infinity).
int count_roots_from(const UPoly& p, const Rational& a);

// Sign changes in the coefficient sequence (Descartes bound on positive roots).
int descartes_variations(const UPoly& p);

}  // namespace xlag
