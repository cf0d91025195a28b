#include "xlag/exact/sturm.hpp"

#include <stdexcept>

namespace xlag {

namespace {

int sign_of(const Rational& q) { return sgn(q); }

int count_changes(const std::vector<int>& signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

std::vector<UPoly> sturm_chain(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("sturm_chain: zero polynomial");
  std::vector<UPoly> chain{p.monic(), p.derivative()};
  if (chain[1].is_zero()) return {chain[0]};
  chain[1] = chain[1].monic();
  while (true) {
    const UPoly& a = chain[chain.size() - 2];
    const UPoly& b = chain.back();
    UPoly r = a.divmod(b).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern and tames coefficient growth.
    Rational lc = r.lc();
    r = r * (1 / abs(lc));
    chain.push_back(-r);
  }
  return chain;
}

int sign_variations_at(const std::vector<UPoly>& chain, const Rational& x) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(sign_of(p.eval(x)));
  return count_changes(s);
}

int sign_variations_at_infinity(const std::vector<UPoly>& chain) {
  std::vector<int> s;
  for (const auto& p : chain) s.push_back(p.is_zero() ? 0 : sign_of(p.lc()));
  return count_changes(s);
}

int count_roots_from(const UPoly& p, const Rational& a) {
  if (p.is_zero()) throw std::domain_error("count_roots_from: zero polynomial");
  if (p.is_constant()) return 0;
  UPoly q = p;
  int at_a = 0;
  while (!q.is_constant() && q.eval(a) == 0) {
    q = q.exact_div(UPoly::linear(-a, 1));
    at_a = 1;
  }
  if (q.is_constant()) return at_a;
  const auto chain = sturm_chain(q);
  return at_a + sign_variations_at(chain, a) - sign_variations_at_infinity(chain);
}

int descartes_variations(const UPoly& p) {
  std::vector<int> s;
  for (const auto& c : p.coeffs()) s.push_back(sign_of(c));
  return count_changes(s);
}

}  // namespace xlag
