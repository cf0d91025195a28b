#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "xlag/oracle.hpp"
#include "xlag/spectral.hpp"
#include "xlag/sweep.hpp"

using namespace xlag;

namespace {

const LinearForm kA = LinearForm::alpha();
const LinearForm kL = LinearForm::lambda();

ProductForm pf(const LinearForm& f, int e = 1) { return ProductForm::of(f, e); }

DiagramPair worked_pair() { return {parse_diagram("(|3,2)"), parse_diagram("(1,0|)")}; }

Pipeline type_one(int m) { return make_pipeline(type_one_pair(m), LinearForm::alpha(-1)); }

Spectrum family(AffinePoint offset, std::set<long> excluded = {}) { return Spectrum{{Family{offset, std::move(excluded)}}, {}}; }

std::map<LinearForm, int> gammas_of(std::initializer_list<std::pair<LinearForm, int>> g) {
  std::map<LinearForm, int> m;
  for (const auto& [f, e] : g) m[f] += e;
  return m;
}

}  // namespace

TEST_CASE("affine points") {
  CHECK(AffinePoint{2, 0} == AffinePoint{2, 0});
  CHECK_FALSE(AffinePoint{2, 0} == AffinePoint{2, -1});
  CHECK(root_of(kL + kA + Rational(1)) == AffinePoint{-1, -1});
  CHECK(root_of(kL - Rational(3)) == AffinePoint{3, 0});
  CHECK(integer_offset(AffinePoint{0, -1}, AffinePoint{3, -1}) == 3);
  CHECK_FALSE(integer_offset(AffinePoint{0, -1}, AffinePoint{-1, -1}).has_value());
  CHECK_FALSE(integer_offset(AffinePoint{0, 0}, AffinePoint{Rational(1, 2), 0}).has_value());
  CHECK_FALSE(integer_offset(AffinePoint{0, 0}, AffinePoint{1, -1}).has_value());
  CHECK(AffinePoint{1, -1}.eval(0.25) == doctest::Approx(0.75));
}

TEST_CASE("factored meromorphic arithmetic") {
  const FactoredMeromorphic a = FactoredMeromorphic(pf(kL - Rational(2))) * FactoredMeromorphic::gamma(-kL - kA);
  CHECK(a * FactoredMeromorphic() == a);
  const FactoredMeromorphic b(ProductForm(1) / pf(kL - Rational(2)));
  CHECK((FactoredMeromorphic(pf(kL - Rational(2))) * b).rational() == ProductForm(1));
  CHECK((a / a).gammas().empty());
  CHECK((a * a.inv()).rational() == ProductForm(1));
  CHECK(a.negated().rational().constant() == -a.rational().constant());
  CHECK(a.sign_suppressed());
  // Poles of Gamma in the denominator give zeros; a simple numerator pole is infinite.
  const FactoredMeromorphic g = FactoredMeromorphic::gamma(-kL, -1);
  CHECK(g.eval(0.5, 2.0) == 0.0);
  CHECK(std::isinf(FactoredMeromorphic::gamma(-kL).eval(0.5, 2.0)));
  CHECK(FactoredMeromorphic::gamma(kA).eval(0.5, 0.0) == doctest::Approx(std::sqrt(std::numbers::pi)));
}

TEST_CASE("bold alpha") {
  CHECK(bold_alpha(worked_pair()) == kA);
  CHECK(bold_alpha(type_one_pair(1), LinearForm::alpha(-1)) == kA);
  CHECK(bold_alpha({}) == kA);
  for (int m = 1; m <= 3; ++m) CHECK(type_one(m).bold_alpha == kA);
  CHECK(make_pipeline(worked_pair()).bold_alpha == kA);
}

TEST_CASE("weights") {
  const Weight e = weight({});
  CHECK(e.bold_alpha == kA);
  CHECK(e.omega == std::vector<RationalFunction>{RationalFunction(1)});
  const Weight t = weight(type_one_pair(1), LinearForm::alpha(-1));
  // L_1^{alpha-1}(-x) = alpha + x.
  REQUIRE(t.omega.size() == 2);
  CHECK(t.omega[0] == RationalFunction(Poly::alpha()));
  CHECK(t.omega[1] == RationalFunction(1));
  CHECK(t.rendered == "x^(a) e^(-x) / [(1)*x + (a)]^2");
  const Weight s = weight(worked_pair());
  CHECK(s.omega.size() == 5);
  CHECK_THROWS_AS(weight({parse_diagram("(|1)"), MayaDiagram()}), ValidationError);
}

TEST_CASE("normalization constants") {
  const NormalizationPair e = normalization(make_pipeline({}));
  CHECK(e.frakC.gammas() == gammas_of({{-kA, 1}, {-kL - kA, -1}}));
  CHECK(e.frakD.gammas() == gammas_of({{kA, 1}, {-kL, -1}}));
  CHECK(e.frakC.rational().lambda_free());
  CHECK(e.frakD.rational().lambda_free());

  const NormalizationPair s = normalization(make_pipeline(worked_pair()));
  CHECK(s.frakC.rational().lambda_part().equal_up_to_sign(pf(kL - Rational(3)) * pf(kL - Rational(2))));
  // The theorem gives (lambda + alpha)(lambda + alpha - 1); the worked example prints lambda + alpha + 1.
  CHECK(s.frakD.rational().lambda_part().equal_up_to_sign(pf(kL + kA) * pf(kL + kA - Rational(1))));

  for (int m = 1; m <= 3; ++m) {
    const NormalizationPair t = normalization(type_one(m));
    CHECK(t.frakC.gammas() == gammas_of({{-kA + Rational(1), 1}, {-kL - kA + Rational(1), -1}}));
    CHECK(t.frakC.rational().lambda_part().equal_up_to_sign(pf(kL + kA + Rational(m))));
    CHECK(t.frakD.rational().lambda_free());
  }
}

TEST_CASE("m-functions") {
  const FactoredMeromorphic e = m_infinity(make_pipeline({}));
  CHECK(e.gammas() == gammas_of({{kA, 1}, {-kL - kA, 1}, {-kL, -1}, {-kA, -1}}));
  CHECK(e.rational().lambda_free());

  const FactoredMeromorphic s = m_infinity(make_pipeline(worked_pair()));
  CHECK(s.lambda_part().gammas() == gammas_of({{-kL - kA, 1}, {-kL, -1}}));
  CHECK(s.gammas() == gammas_of({{kA, 1}, {-kL - kA, 1}, {-kL, -1}, {-kA, -1}}));
  CHECK(s.rational().lambda_part().equal_up_to_sign(pf(kL + kA) * pf(kL + kA - Rational(1)) /
                                                    (pf(kL - Rational(3)) * pf(kL - Rational(2)))));
  CHECK(s.rational().alpha_part().equal_up_to_sign(ProductForm(1) / pf(kA)));

  const FactoredMeromorphic t = m_infinity(type_one(1));
  CHECK(t.gammas() == gammas_of({{kA - Rational(1), 1}, {-kL - kA + Rational(1), 1}, {-kL, -1}, {-kA + Rational(1), -1}}));
  CHECK(t.rational().lambda_part().equal_up_to_sign(ProductForm(1) / pf(kL + kA + Rational(1))));
  // The general assembly carries alpha - 1; the direct Type I computation has alpha^2 (1 - alpha).
  // A positive constant factor does not move the poles.
  CHECK(t.rational().alpha_part().equal_up_to_sign(pf(kA - Rational(1))));
}

TEST_CASE("m_zero is the negative reciprocal of m_infinity") {
  for (const Pipeline& p : {make_pipeline({}), make_pipeline(worked_pair()), type_one(1), type_one(2), type_one(3)}) {
    const FactoredMeromorphic mi = m_infinity(p), mz = m_zero(p);
    CHECK(mz == mi.inv().negated());
    const FactoredMeromorphic prod = mi * mz;
    CHECK(prod.gammas().empty());
    CHECK(prod.rational() == ProductForm(-1));
    CHECK(mz.sign_suppressed());
  }
  CHECK(poles(m_zero(type_one(1))) == family({0, 0}));
}

TEST_CASE("m_tau") {
  const FactoredMeromorphic m = m_infinity(type_one(1));
  const double lam = 0.37, a = 0.5;
  CHECK(m_tau_numeric(m, 0.0, a, lam) == doctest::Approx(-1.0 / m.eval(a, lam)));
  CHECK(m_tau_numeric(m, 1e12, a, lam) == doctest::Approx(m.eval(a, lam)).epsilon(1e-6));
  const std::string r = m_tau_render(m, "tau");
  CHECK(r.find("(1 + tau * [") == 0);
}

TEST_CASE("spectra of the classical operator") {
  const Pipeline p = make_pipeline({});
  for (PoleConvention c : {PoleConvention::paper, PoleConvention::strict}) {
    CHECK(spectrum(p, Extension::zero, c) == family({0, 0}));
    CHECK(spectrum(p, Extension::infinity, c) == family({0, -1}));
  }
  CHECK(spectrum(p, Extension::infinity).to_string() == "{n - a : n >= 0}");
}

TEST_CASE("spectra of Type I operators") {
  for (int m = 1; m <= 3; ++m) {
    const Pipeline p = type_one(m);
    for (PoleConvention c : {PoleConvention::paper, PoleConvention::strict}) {
      const Spectrum inf = spectrum(p, Extension::infinity, c);
      CHECK(inf == Spectrum{{Family{{1, -1}, {}}}, {AffinePoint{Rational(-m), -1}}});
      CHECK(spectrum(p, Extension::zero, c) == family({0, 0}));
    }
    CHECK(disjoint(spectrum(p, Extension::zero), spectrum(p, Extension::infinity)));
  }
}

TEST_CASE("spectra of the worked example") {
  const Pipeline p = make_pipeline(worked_pair());
  const Spectrum inf = spectrum(p, Extension::infinity);
  const Spectrum zero = spectrum(p, Extension::zero);
  // Paper convention with the theorem's D2 numerators (lambda + alpha)(lambda + alpha - 1).
  CHECK(inf == Spectrum{{Family{{0, -1}, {0, 1}}}, {AffinePoint{2, 0}, AffinePoint{3, 0}}});
  CHECK(zero == Spectrum{{Family{{0, 0}, {2, 3}}}, {AffinePoint{0, -1}, AffinePoint{1, -1}}});
  CHECK(inf.to_string() == "{n - a : n >= 0, n not in {0,1}} U {2, 3}");
  CHECK(disjoint(inf, zero));
  // Strict order bookkeeping drops the contested points.
  CHECK(spectrum(p, Extension::infinity, PoleConvention::strict) == Spectrum{{Family{{0, -1}, {0, 1}}}, {}});
  CHECK(spectrum(p, Extension::zero, PoleConvention::strict) == Spectrum{{Family{{0, 0}, {2, 3}}}, {}});
  CHECK_FALSE(disjoint(inf, Spectrum{{}, {AffinePoint{3, 0}}}));
  CHECK_FALSE(disjoint(family({0, 0}), family({5, 0})));
  CHECK(disjoint(family({0, 0}), family({0, -1})));
}

TEST_CASE("Friedrichs extension") {
  const Pipeline p8 = make_pipeline(worked_pair());
  for (double a : {0.25, 0.5, 0.75})
    CHECK(identify_friedrichs(spectrum(p8, Extension::zero), spectrum(p8, Extension::infinity), a) == Extension::infinity);
  const Pipeline t = type_one(1);
  CHECK(identify_friedrichs(spectrum(t, Extension::zero), spectrum(t, Extension::infinity), 0.5) == Extension::zero);
  CHECK_THROWS_AS(identify_friedrichs(family({0, 0}), family({0, 0}), 0.5), std::domain_error);
  CHECK_THROWS_AS(identify_friedrichs(Spectrum{}, family({0, 0}), 0.5), std::domain_error);
}

TEST_CASE("Gamma numerics") {
  CHECK(std::abs(gamma_numeric(5.0) - 24.0) <= 24.0 * 1e-12);
  const double sp = std::sqrt(std::numbers::pi);
  CHECK(std::abs(gamma_numeric(0.5) - sp) <= sp * 1e-12);
  CHECK(std::abs(gamma_numeric(-0.5) + 2 * sp) <= 2 * sp * 1e-12);
  CHECK_THROWS_AS(gamma_numeric(0.0), std::domain_error);
  CHECK_THROWS_AS(gamma_numeric(-3.0), std::domain_error);
}

TEST_CASE("level curves") {
  const Pipeline t = type_one(1);
  const NumericMFunction m(t, 0.5);
  const double tau = m(0.3);
  const auto roots = eigenvalues_tau_numeric(t, 0.5, tau, -0.9, 0.9);
  bool found = false;
  for (const auto& r : roots) {
    found = found || std::abs(r.lambda - 0.3) < 1e-9;
    CHECK(std::abs(r.residual) <= 1e-10 * (1 + std::abs(tau)));
  }
  CHECK(found);

  // tau = 0 reproduces the zero-extension spectrum.
  const auto zeros = eigenvalues_tau_numeric(t, 0.5, 0.0, -0.9, 5.3);
  const auto expected = spectrum(t, Extension::zero).in_window(0.5, -0.9, 5.3);
  REQUIRE(zeros.size() == expected.size());
  for (std::size_t i = 0; i < zeros.size(); ++i) CHECK(std::abs(zeros[i].lambda - expected[i]) < 1e-9);
  // Poles sit at n + 1/2 and -3/2; an endpoint on a pole is rejected.
  CHECK_THROWS_AS(eigenvalues_tau_numeric(t, 0.5, 0.0, -0.9, 5.5), std::domain_error);

  // The worked example is not monotone between poles at alpha = 1/2.
  CHECK_THROWS_AS(NumericMFunction(make_pipeline(worked_pair()), 0.5), std::runtime_error);
}

TEST_CASE("scaling M_inf leaves the spectra unchanged") {
  for (const Pipeline& p : {make_pipeline(worked_pair()), type_one(2)}) {
    const FactoredMeromorphic m = m_infinity(p);
    const FactoredMeromorphic scaled = m * FactoredMeromorphic(ProductForm(Rational(-7, 3)));
    for (PoleConvention c : {PoleConvention::paper, PoleConvention::strict}) {
      CHECK(poles(scaled, c) == poles(m, c));
      CHECK(poles(scaled.inv(), c) == poles(m.inv(), c));
    }
    // The tau level set of c M is the tau / c level set of M.
    for (double lam : {0.3, 1.45, 4.2}) CHECK(scaled.eval(0.5, lam) / (-7.0 / 3.0) == doctest::Approx(m.eval(0.5, lam)));
  }
}

TEST_CASE("factored M_inf against a direct numeric assembly") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.8, 6.8);
  for (const Pipeline& p : {make_pipeline({}), make_pipeline(worked_pair()), type_one(1), type_one(3)}) {
    const double a = 0.5;
    const FactoredMeromorphic m = m_infinity(p);
    const double ab = eval_double(p.alpha, a, 0);
    int done = 0;
    while (done < 20) {
      const double lam = u(rng);
      bool near = false;
      for (int n = -6; n <= 10; ++n) near = near || std::abs(lam - n) < 0.05 || std::abs(lam - (n - a)) < 0.05;
      if (near) continue;
      const double c = -eval_double(ProductForm::of(p.bold_alpha) * p.C() * p.E1 / p.omega0, a, lam) *
                       gamma_numeric(-ab) / gamma_numeric(-lam - ab);
      const double d = -eval_double(p.D() * p.E2 / p.omega0, a, lam) * gamma_numeric(ab) / gamma_numeric(-lam);
      const double direct = d / c;
      CHECK(std::abs(m.eval(a, lam) - direct) <= 1e-9 * std::abs(direct));
      ++done;
    }
  }
}

TEST_CASE("orthogonality of exceptional polynomials") {
  const auto e = orthogonality_check({}, Rational(1, 2), 4);
  CHECK(e.worst < 1e-8);
  CHECK(e.degrees_used == std::vector<int>{0, 1, 2, 3});
  const auto t = orthogonality_check(type_one_pair(1), Rational(1, 2), 5, LinearForm::alpha(-1));
  CHECK(t.worst < 1e-8);
  CHECK(t.degrees_used.size() == 5);
  // Omega has a root near x = 0.114 for the worked example at alpha = 1/2.
  CHECK_THROWS_AS(orthogonality_check(worked_pair(), Rational(1, 2), 5), std::domain_error);
}

TEST_CASE("zero-extension eigenvalues have polynomial eigenfunctions") {
  struct Case {
    DiagramPair pair;
    int offset;
  };
  for (const Case& c : {Case{{}, 0}, Case{worked_pair(), 0}, Case{type_one_pair(1), -1}, Case{type_one_pair(2), -1}}) {
    const Pipeline p = make_pipeline(c.pair, LinearForm::alpha(Rational(c.offset)));
    const Spectrum s = spectrum(p, Extension::zero);
    const Rational a = Rational(1, 3) + c.offset;
    for (int n = 0; n <= 7; ++n) {
      const bool member = s.contains(AffinePoint{n, 0});
      CHECK(member == !exceptional_polynomial(c.pair, a, n).is_zero());
    }
  }
}

TEST_CASE("spectra are disjoint for all pairs with indices below 3") {
  int admissible = 0;
  for (const DiagramPair& pair : enumerate_pairs(3)) {
    const Pipeline p = make_pipeline(pair);
    if (!is_even(p.first.mu)) continue;
    ++admissible;
    for (PoleConvention c : {PoleConvention::paper, PoleConvention::strict})
      REQUIRE(disjoint(spectrum(p, Extension::zero, c), spectrum(p, Extension::infinity, c)));
  }
  CHECK(admissible > 0);
}
