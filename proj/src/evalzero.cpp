#include "xlag/evalzero.hpp"

#include <stdexcept>
#include <string>

namespace xlag {

namespace {

ProductForm checked_rising(const LinearForm& x, int n, const char* where, int index) {
  if (n < 0) throw std::logic_error(std::string(where) + ": negative factorial length at index " + std::to_string(index));
  return rising(x, n);
}

Rational factorials(const std::vector<int>& seq) {
  Rational f = 1;
  for (int v : seq) f *= factorial(static_cast<unsigned>(v));
  return f;
}

// Shared closed form. `d` is the number of derivatives taken on the seed columns
// (r for the solution Wronskians, r - 1 for the plain one); `lambda_node` is
// appended to the Vandermonde nodes when present.
ProductForm closed_form(const Partition& mu, const Partition& nu, const LinearForm& a, int d, bool with_solution,
                        const LinearForm& lambda_node) {
  const std::vector<int> n = index_sequence(mu);
  const std::vector<int> m = index_sequence(nu);
  const int top = d + 1;

  ProductForm num(1), den(1);
  for (int k = 1; k <= top; ++k) num *= checked_rising(a + Rational(k), top - k, "eval", k);
  auto split = [&](const std::vector<int>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const int v = seq[i];
      const int idx = static_cast<int>(i) + 1;
      if (v >= d)
        num *= checked_rising(a + Rational(d + 1), v - d, "eval", idx);
      else
        den *= checked_rising(a + Rational(1 + v), d - v, "eval", idx);
    }
  };
  split(n);
  split(m);
  if (with_solution) den *= rising(a + Rational(1), d);

  std::vector<LinearForm> nodes;
  for (auto it = n.rbegin(); it != n.rend(); ++it) nodes.push_back(LinearForm::constant(Rational(-*it)));
  for (int v : m) nodes.push_back(a + Rational(1 + v));
  if (with_solution) nodes.push_back(lambda_node);
  num *= vandermonde(nodes);
  den *= ProductForm(factorials(n) * factorials(m));
  return num / den;
}

}  // namespace

ProductForm vandermonde(const std::vector<LinearForm>& nodes) {
  ProductForm p(1);
  for (std::size_t j = 0; j < nodes.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) p *= ProductForm::of(nodes[j] - nodes[i]);
  return p;
}

int threshold_count(const std::vector<int>& seq, int bound) {
  int c = 0;
  for (int v : seq)
    if (v >= bound) ++c;
  return c;
}

ProductForm eval_first_kind(const Partition& mu, const Partition& nu, const LinearForm& alpha, const LinearForm& lambda) {
  const int r = mu.length() + nu.length();
  return closed_form(mu, nu, alpha, r, true, -lambda);
}

ProductForm eval_second_kind(const Partition& mup, const Partition& nup, const LinearForm& alpha,
                             const LinearForm& lambda) {
  return eval_first_kind(nup, mup, -alpha, lambda + alpha);
}

ProductForm eval_plain(const Partition& mu, const Partition& nu, const LinearForm& alpha) {
  const int r = mu.length() + nu.length();
  if (r == 0) return ProductForm(1);
  return closed_form(mu, nu, alpha, r - 1, false, LinearForm{});
}

ProductForm eval_plain_conjugate(const Partition& mup, const Partition& nup, const LinearForm& alpha) {
  return eval_plain(nup, mup, -alpha);
}

}  // namespace xlag
