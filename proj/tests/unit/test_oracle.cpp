#include <doctest.h>

#include <random>

#include "xlag/evalzero.hpp"
#include "xlag/exact/sturm.hpp"
#include "xlag/oracle.hpp"
#include "xlag/shifts.hpp"
#include "xlag/spectral.hpp"

using namespace xlag;

namespace {

using QS = QuasiRationalSeries<RationalFunction>;

const RationalFunction kAlpha(Poly::alpha());
const RationalFunction kLambda(Poly::lambda());

DiagramPair pair_of(const char* m1, const char* m2) { return {parse_diagram(m1), parse_diagram(m2)}; }

DiagramPair worked_pair() { return pair_of("(|3,2)", "(1,0|)"); }

// Ratio of two coefficient lists when one is a constant multiple of the other.
std::optional<RationalFunction> proportional(const std::vector<RationalFunction>& a, const std::vector<RationalFunction>& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::optional<RationalFunction> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() != b[i].is_zero()) return std::nullopt;
    if (a[i].is_zero()) continue;
    const RationalFunction r = a[i] / b[i];
    if (ratio && !(*ratio == r)) return std::nullopt;
    ratio = r;
  }
  return ratio;
}

QS wronskian(const std::vector<QS>& f) {
  const std::size_t n = f.size();
  std::vector<std::vector<QS>> m(n, std::vector<QS>(n));
  for (std::size_t j = 0; j < n; ++j) {
    QS d = f[j];
    for (std::size_t i = 0; i < n; ++i) {
      m[i][j] = d;
      if (i + 1 < n) d = d.differentiate();
    }
  }
  const QS one = QS::term(kAlpha, Tag{}, Series<RationalFunction>::polynomial({RationalFunction(1)}, f[0].terms().begin()->second.second.prec));
  return laplace_determinant(m, one);
}

bool vanishes(const QS& f, int upto) {
  for (const auto& [jk, bs] : f.terms())
    for (int t = 0; t < std::min(upto, bs.second.prec); ++t)
      if (!bs.second[t].is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("Wronskian prefactor bookkeeping") {
  const auto w = WronskianBuild::make(worked_pair(), SolutionKind::first);
  CHECK(w.rows == 5);
  CHECK(w.exp_rate == 0);
  CHECK(w.alpha_power == 2);
  CHECK(w.integer_power == 6);
  const auto s = WronskianBuild::make(worked_pair(), SolutionKind::second);
  CHECK(s.alpha_power == 3);
  CHECK(s.integer_power == 6);
  const auto p = WronskianBuild::make(worked_pair(), SolutionKind::plain);
  CHECK(p.integer_power == 4);
  CHECK(p.rows == 4);
}

TEST_CASE("plain Wronskians") {
  const auto empty = omega_plain_symbolic({}, 0, 3);
  CHECK(empty[0] == RationalFunction(1));
  CHECK(empty[1].is_zero());
  const auto l1 = omega_plain_symbolic(pair_of("(|1)", "(|)"), 0, 3);
  CHECK(l1[0] == kAlpha + RationalFunction(1));
  CHECK(l1[1] == RationalFunction(-1));
  CHECK(l1[2].is_zero());

  const auto full = omega_plain_symbolic(worked_pair(), 0, 6);
  CHECK_FALSE(full[4].is_zero());
  CHECK(full[5].is_zero());
  CHECK(omega_degree(worked_pair()) == 4);
  const auto canon = omega_plain_symbolic(pair_of("(|3,2)", "(|)"), -2, 6);
  const auto ratio = proportional(full, canon);
  REQUIRE(ratio.has_value());
  const PlainConstants pc = shift_constants_plain(worked_pair());
  CHECK(ratio->equal_up_to_sign(pc.C3.to_rational_function()));
}

TEST_CASE("Wronskians with a solution column at x = 0") {
  CHECK(omega_at_zero_symbolic({}, SolutionKind::first, 0, 0) == RationalFunction(1));
  CHECK(omega_at_zero_symbolic({}, SolutionKind::second, 0, 0) == RationalFunction(1));

  const DiagramPair p8 = worked_pair();
  const auto first = shift_constants_first(p8);
  const RationalFunction e1 =
      kAlpha * (kAlpha + RationalFunction(1)) * (RationalFunction(3) - kLambda) * (RationalFunction(2) - kLambda) / RationalFunction(12);
  CHECK(omega_at_zero_symbolic(p8, SolutionKind::first, 0, 0)
            .equal_up_to_sign((first.C1 * first.C2 * first.C3).to_rational_function() * e1));

  const auto second = shift_constants_second(p8);
  const RationalFunction e2 =
      (kAlpha - RationalFunction(1)) * kAlpha * (kLambda - RationalFunction(1)) * kLambda / RationalFunction(12);
  CHECK(omega_at_zero_symbolic(p8, SolutionKind::second, 0, 0)
            .equal_up_to_sign((second.D1 * second.D2 * second.D3).to_rational_function() * e2));
}

TEST_CASE("Type I second kind: the D2 denominator cancels") {
  for (int m = 1; m <= 3; ++m) {
    const DiagramPair p = type_one_pair(m);
    const RationalFunction oracle = omega_at_zero_symbolic(p, SolutionKind::second, -1, 0);
    CHECK(oracle.den().degree_lambda() <= 0);
    const auto sc = shift_constants_second(p, LinearForm::alpha(-1));
    CHECK(sc.D2.to_rational_function().den().degree_lambda() > 0);
    const Pipeline pl = make_pipeline(p, LinearForm::alpha(-1));
    CHECK(oracle.equal_up_to_sign((pl.D() * pl.E2).to_rational_function()));
  }
}

TEST_CASE("deleted states") {
  // lambda = 2 repeats the seed L_2^alpha.
  std::mt19937_64 rng(1);
  const ModP a = ModP::random(rng);
  const auto z = omega_coefficients(pair_of("(|2)", "(|)"), SolutionKind::first, a, LambdaArg<ModP>{false, ModP(2)}, 6);
  for (const auto& c : z) CHECK(c.is_zero());
  const auto nz = omega_coefficients(pair_of("(|2)", "(|)"), SolutionKind::first, a, LambdaArg<ModP>{false, ModP(3)}, 6);
  CHECK_FALSE(nz[0].is_zero());
  CHECK(exceptional_polynomial(worked_pair(), Rational(1, 2), 2).is_zero());
  CHECK(exceptional_polynomial(worked_pair(), Rational(1, 2), 3).is_zero());
  CHECK_FALSE(exceptional_polynomial(worked_pair(), Rational(1, 2), 4).is_zero());
  // Every seed degree of matching kind is deleted.
  for (int n : {0, 2, 3})
    CHECK(exceptional_polynomial(pair_of("(|3,2,0)", "(|)"), Rational(7, 3), n).is_zero());
}

TEST_CASE("exceptional polynomials") {
  // Empty pair: proportional to L_2^{1/2}.
  const UPoly p = exceptional_polynomial({}, Rational(1, 2), 2);
  const auto l2 = laguerre_coeffs<Rational>(2, Rational(1, 2));
  REQUIRE(p.degree() == 2);
  const Rational r = p.coeff(0) / l2[0];
  for (int k = 0; k <= 2; ++k) CHECK(p.coeff(k) == r * l2[static_cast<std::size_t>(k)]);
  // Type I m = 1 at alpha - 1: the first polynomial already has degree 1.
  const auto t = exceptional_polynomial_symbolic(type_one_pair(1), -1, 0);
  CHECK(t.size() == 2);
  // Symbolic L_1 / L_1(0) = 1 - x/(a + 1).
  const auto l1 = exceptional_polynomial_symbolic({}, 0, 1);
  REQUIRE(l1.size() == 2);
  CHECK(l1[0] == QAlpha(1));
  CHECK(l1[1] == QAlpha(UPoly(-1), UPoly::linear(1, 1)));
}

TEST_CASE("symbolic exceptional polynomials specialize to the exact ones") {
  struct Case {
    DiagramPair pair;
    int offset;
  };
  const std::vector<Case> cases = {{{}, 0},
                                   {worked_pair(), 0},
                                   {type_one_pair(2), -1},
                                   {pair_of("(|2,1)", "(|)"), 0},
                                   {pair_of("(0|)", "(|1)"), 0}};
  for (const Case& c : cases) {
    for (int n = 0; n <= 5; ++n) {
      const auto sym = exceptional_polynomial_symbolic(c.pair, c.offset, n);
      // Points away from the interpolation samples, including negative values.
      for (const Rational& a : {Rational(5, 7), Rational(-2, 9), Rational(13, 11)}) {
        const UPoly exact = exceptional_polynomial(c.pair, a + c.offset, n);
        REQUIRE(static_cast<int>(sym.size()) == exact.degree() + 1);
        for (std::size_t k = 0; k < sym.size(); ++k) CHECK(sym[k].eval_in(a) == exact.coeff(static_cast<int>(k)));
      }
    }
  }
}

TEST_CASE("zero-freeness on the half line") {
  CHECK(zero_free_on_halfline({}, Rational(1, 2)));
  CHECK_FALSE(zero_free_on_halfline(pair_of("(|1)", "(|)"), Rational(1, 2)));
  // Omega for the worked example at alpha = 1/2 is proportional to
  // 16x^4 - 32x^3 + 24x^2 + 24x - 3, which has a root near x = 0.11389.
  const UPoly om = omega_polynomial(worked_pair(), Rational(1, 2));
  const UPoly target(std::vector<Rational>{-3, 24, 24, -32, 16});
  CHECK(om.monic() == target.monic());
  CHECK(count_roots_from(om, 0) == 1);
  CHECK(om.eval(Rational(11, 100)) * om.eval(Rational(12, 100)) < 0);
  // Omega_{(2,2),()} at 1/2 is Omega_{M1,M2} at 5/2 up to C3, which is zero-free.
  CHECK(zero_free_on_halfline(worked_pair(), Rational(1, 2)));
  CHECK(count_roots_from(omega_polynomial(worked_pair(), Rational(5, 2)), 0) == 0);
  // (1|) has canonical shift 2 and mu = (1): L_1 at alpha has a positive root, while the
  // raw polynomial is L_1 at alpha - 2 with a negative root.
  CHECK_FALSE(zero_free_on_halfline(pair_of("(1|)", "(|)"), Rational(1, 2)));
  CHECK(count_roots_from(omega_polynomial(pair_of("(1|)", "(|)"), Rational(1, 2)), 0) == 0);
  for (int m = 1; m <= 3; ++m) CHECK(zero_free_on_halfline(type_one_pair(m), Rational(1, 2) - 1));
}

TEST_CASE("Wronskian of multiplied seeds") {
  const int trunc = 10;
  const std::vector<QS> f = {symbolic_seed({1, 0, 0}, trunc), symbolic_seed({1, 2, 0}, trunc), symbolic_seed({3, 1, 0}, trunc)};
  const QS base = wronskian(f);
  const QS ex = QS::term(kAlpha, Tag{0, 0, -1}, Series<RationalFunction>::polynomial({RationalFunction(1)}, trunc));
  const QS sq = QS::term(kAlpha, Tag{0, 2, 0}, Series<RationalFunction>::polynomial({RationalFunction(1)}, trunc));
  for (const QS& g : {ex, sq}) {
    std::vector<QS> gf;
    for (const auto& fi : f) gf.push_back(g * fi);
    CHECK(vanishes(wronskian(gf) - g * g * g * base, trunc - 4));
  }
}
