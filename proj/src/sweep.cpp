#include "xlag/sweep.hpp"

#include <algorithm>
#include <random>

#include "xlag/evalzero.hpp"
#include "xlag/exact/modp.hpp"
#include "xlag/shifts.hpp"

namespace xlag {

namespace {

std::vector<int> subset(int mask, int max_index) {
  std::vector<int> v;
  for (int i = max_index - 1; i >= 0; --i)
    if (mask >> i & 1) v.push_back(i);
  return v;
}

bool equal_up_to_sign(const ModP& a, const ModP& b) { return a == b || a == -b; }

}  // namespace

std::string to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::plain: return "plain";
    case SolutionKind::first: return "first";
    case SolutionKind::second: return "second";
  }
  return "?";
}

std::vector<DiagramPair> enumerate_pairs(int max_index) {
  if (max_index < 0 || max_index > 7) throw std::invalid_argument("enumerate_pairs: max_index must be in [0, 7]");
  const int n = 1 << max_index;
  std::vector<DiagramPair> out;
  out.reserve(static_cast<std::size_t>(n) * n * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          out.push_back({MayaDiagram(subset(d, max_index), subset(a, max_index)),
                         MayaDiagram(subset(c, max_index), subset(b, max_index))});
  return out;
}

SweepResult oracle_sweep(const SweepOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  SweepResult res;
  for (const DiagramPair& pair : enumerate_pairs(opts.max_index)) {
    ++res.pairs;
    const ShiftReport sr = shift_report(pair);
    if (!is_even(sr.mu)) continue;
    ++res.admissible;
    const ProductForm first =
        sr.C() * eval_first_kind(sr.mu, sr.nu, sr.alpha_prime, LinearForm::lambda(sr.t1)) * opts.perturbation;
    const ProductForm second =
        sr.D() * eval_second_kind(sr.mup, sr.nup, sr.alpha_second, LinearForm::lambda(sr.t1p)) * opts.perturbation;
    const ProductForm plain = sr.C3 * eval_plain(sr.mu, sr.nu, sr.alpha_prime) * opts.perturbation;
    const ProductForm plain_conj = sr.D3 * eval_plain_conjugate(sr.mup, sr.nup, sr.alpha_second) * opts.perturbation;

    bool ok[3] = {true, true, true};
    for (int k = 0; k < opts.points; ++k) {
      const ModP a = ModP::random(rng), l = ModP::random(rng);
      const ModP o1 = omega_at_zero(pair, SolutionKind::first, a, LambdaArg<ModP>{false, l}, opts.trunc).eval(l);
      const ModP o2 = omega_at_zero(pair, SolutionKind::second, a, LambdaArg<ModP>{false, l}, opts.trunc).eval(l);
      const auto o0 = omega_coefficients(pair, SolutionKind::plain, a, LambdaArg<ModP>{false, ModP(0)}, 1, opts.trunc);
      const ModP p0 = o0[0].is_zero() ? ModP(0) : o0[0].coeffs()[0];
      ok[0] = ok[0] && equal_up_to_sign(o1, first.eval_in(a, l));
      ok[1] = ok[1] && equal_up_to_sign(o2, second.eval_in(a, l));
      ok[2] = ok[2] && equal_up_to_sign(p0, plain.eval_in(a, l)) && equal_up_to_sign(p0, plain_conj.eval_in(a, l));
    }
    res.identities += 3;
    if (!ok[0]) res.mismatches.push_back({pair, SolutionKind::first, first.to_string()});
    if (!ok[1]) res.mismatches.push_back({pair, SolutionKind::second, second.to_string()});
    if (!ok[2]) res.mismatches.push_back({pair, SolutionKind::plain, plain.to_string()});
  }
  std::stable_sort(res.mismatches.begin(), res.mismatches.end(),
                   [](const SweepMismatch& x, const SweepMismatch& y) { return x.pair.r() < y.pair.r(); });
  return res;
}

}  // namespace xlag
