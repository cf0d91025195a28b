#include <doctest.h>

#include <random>

#include "xlag/oracle.hpp"
#include "xlag/shifts.hpp"
#include "xlag/spectral.hpp"
#include "xlag/sweep.hpp"

using namespace xlag;

namespace {

const LinearForm kA = LinearForm::alpha();
const LinearForm kL = LinearForm::lambda();

ProductForm pf(const LinearForm& f, int e = 1) { return ProductForm::of(f, e); }

DiagramPair pair_of(const char* m1, const char* m2) { return {parse_diagram(m1), parse_diagram(m2)}; }

DiagramPair worked_pair() { return pair_of("(|3,2)", "(1,0|)"); }

bool same_up_to_sign(const std::vector<LambdaPoly<ModP>>& a, const std::vector<LambdaPoly<ModP>>& b, const ModP& scale) {
  int sign = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const ModP x = a[i].is_zero() ? ModP(0) : a[i].coeffs()[0];
    const ModP y = b[i].is_zero() ? ModP(0) : scale * b[i].coeffs()[0];
    if (x == y && x == -y) continue;
    const int s = x == y ? 1 : (x == -y ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) return false;
    sign = s;
  }
  return true;
}

}  // namespace

TEST_CASE("single steps, first kind") {
  const auto d = step_reduce_first(worked_pair(), StepCase::d);
  CHECK(d.constant.equal_up_to_sign(pf(kA) * pf(kA + Rational(2)) * pf(kA + Rational(3))));
  CHECK(d.d_alpha == -1);
  CHECK(d.d_lambda == 0);
  CHECK(d.pair == pair_of("(|3,2)", "(0|)"));

  const auto b = step_reduce_first(pair_of("(0|)", "(|)"), StepCase::b);
  CHECK(b.constant.equal_up_to_sign(pf(kA)));
  CHECK(b.d_alpha == -1);
  CHECK(b.d_lambda == 1);
  CHECK(b.pair == DiagramPair{});

  const auto a = step_reduce_first(pair_of("(|0)", "(|)"), StepCase::a);
  CHECK(a.constant.equal_up_to_sign(pf(kL) / pf(kA + Rational(1))));
  CHECK(a.d_alpha == 1);
  CHECK(a.d_lambda == -1);

  const auto c = step_reduce_first(pair_of("(|)", "(|0)"), StepCase::c);
  CHECK(c.constant.equal_up_to_sign(pf(kL + kA + Rational(1)) / pf(kA + Rational(1))));
  CHECK(c.d_alpha == 1);
  CHECK(c.d_lambda == 0);

  CHECK_THROWS_AS(step_reduce_first(worked_pair(), StepCase::a), ValidationError);
}

TEST_CASE("single steps, second kind") {
  const auto c = step_reduce_second(pair_of("(|)", "(|0)"), StepCase::c);
  CHECK(c.constant.equal_up_to_sign(pf(kA)));
  const auto b = step_reduce_second(pair_of("(0|)", "(|)"), StepCase::b);
  CHECK(b.constant.equal_up_to_sign(pf(kL + Rational(1)) / pf(kA - Rational(1))));
  const auto d = step_reduce_second(pair_of("(|)", "(0|)"), StepCase::d);
  CHECK(d.constant.equal_up_to_sign(pf(kL + kA) / pf(kA - Rational(1))));
  CHECK(d.d_lambda == 0);
  CHECK(b.d_lambda != 0);
}

TEST_CASE("closed-form constants for the worked example") {
  const auto f = shift_constants_first(worked_pair());
  CHECK(f.t1 == 0);
  CHECK(f.t2 == 2);
  CHECK(f.mu == Partition({2, 2}));
  CHECK(f.nu.empty());
  CHECK(f.C1.equal_up_to_sign(ProductForm(1)));
  CHECK(f.C2.equal_up_to_sign(pf(kA) * pf(kA - Rational(1))));
  const ProductForm c3 = pf(kA + Rational(1)) * pf(kA + Rational(2), 2) * pf(kA + Rational(3));
  CHECK(f.C3.equal_up_to_sign(c3));

  const auto s = shift_constants_second(worked_pair());
  CHECK(s.t1p == -4);
  CHECK(s.t2p == 2);
  CHECK(s.mup == Partition({2, 2}));
  CHECK(s.D1.equal_up_to_sign(pf(kA) * pf(kA + Rational(1)) * pf(kA + Rational(2)) * pf(kA + Rational(3)) /
                              (pf(kL) * pf(kL - Rational(1)))));
  // Theorem and oracle value; the worked example prints lambda + alpha + 1 in place of lambda + alpha - 1.
  CHECK(s.D2.equal_up_to_sign(pf(kL + kA) * pf(kL + kA - Rational(1)) / (pf(kA + Rational(2)) * pf(kA + Rational(3)))));
  CHECK(s.D3.equal_up_to_sign(c3));

  const auto p = shift_constants_plain(worked_pair());
  CHECK(p.C3.equal_up_to_sign(c3));
  CHECK(p.D3.equal_up_to_sign(c3));
}

TEST_CASE("closed-form constants for small pairs") {
  const auto e = shift_constants_first({});
  CHECK(e.t1 == 0);
  CHECK(e.C1 * e.C2 * e.C3 == ProductForm(1));
  const auto es = shift_constants_second({});
  CHECK(es.D1 * es.D2 * es.D3 == ProductForm(1));
  const auto ep = shift_constants_plain({});
  CHECK(ep.C3 == ProductForm(1));
  CHECK(ep.D3 == ProductForm(1));

  const auto f = shift_constants_first(pair_of("(|1,0)", "(|)"));
  CHECK(f.t1 == -2);
  CHECK(f.mu.empty());
  CHECK(f.C1.equal_up_to_sign(pf(kL) * pf(kL - Rational(1)) / (pf(kA + Rational(1)) * pf(kA + Rational(2)))));
  CHECK(f.C2 * f.C3 == ProductForm(1));

  const auto t = shift_constants_second(type_one_pair(1), LinearForm::alpha(-1));
  CHECK(t.t2p == -2);
}

TEST_CASE("plain identity for (|1), (0|)") {
  const DiagramPair p = pair_of("(|1)", "(0|)");
  const ShiftReport r = shift_report(p);
  const auto full = omega_plain_symbolic(p, 0, 4);
  const auto canon = omega_plain_symbolic(r.canonical(), -(r.t1 + r.t2), 4);
  const auto conj = omega_plain_symbolic(r.conjugate_canonical(), -(r.t1p + r.t2p), 4);
  const RationalFunction c3 = r.C3.to_rational_function(), d3 = r.D3.to_rational_function();
  for (int k = 0; k < 4; ++k) {
    CHECK(full[static_cast<std::size_t>(k)].equal_up_to_sign(c3 * canon[static_cast<std::size_t>(k)]));
    CHECK(full[static_cast<std::size_t>(k)].equal_up_to_sign(d3 * conj[static_cast<std::size_t>(k)]));
  }
}

TEST_CASE("step walks compose to the closed forms for indices below 5 and r <= 6") {
  int checked = 0;
  for (const DiagramPair& p : enumerate_pairs(5)) {
    if (p.r() > 6) continue;
    const auto f = shift_constants_first(p);
    const Walk wf = walk_first(p);
    REQUIRE(wf.total.equal_up_to_sign(f.C1 * f.C2 * f.C3));
    REQUIRE(wf.d_alpha == -(f.t1 + f.t2));
    REQUIRE(wf.d_lambda == f.t1);
    const auto s = shift_constants_second(p);
    const Walk ws = walk_second(p);
    REQUIRE(ws.total.equal_up_to_sign(s.D1 * s.D2 * s.D3));
    REQUIRE(ws.d_alpha == -(s.t1p + s.t2p));
    REQUIRE(ws.d_lambda == s.t1p);
    REQUIRE(ws.target.m1.included.empty());
    REQUIRE(wf.target.m1.excluded.empty());
    ++checked;
  }
  CHECK(checked == 60460);
}

TEST_CASE("shift identities as truncated series") {
  // Omega_pair[h^a(x, l)] = C * Omega_canonical[h^{a'}(x, l + t1)], and the second-kind analogue,
  // at random points of F_p, ten coefficients, all pairs with indices below 4 and r <= 5.
  std::mt19937_64 rng(77);
  const int count = 10;
  int checked = 0;
  for (const DiagramPair& p : enumerate_pairs(4)) {
    if (p.r() > 5) continue;
    const ShiftReport r = shift_report(p);
    const ModP a = ModP::random(rng), l = ModP::random(rng);
    const auto lhs1 = omega_coefficients(p, SolutionKind::first, a, LambdaArg<ModP>{false, l}, count);
    const auto rhs1 = omega_coefficients(r.canonical(), SolutionKind::first, a + ModP(-(r.t1 + r.t2)),
                                         LambdaArg<ModP>{false, l + ModP(r.t1)}, count);
    REQUIRE(same_up_to_sign(lhs1, rhs1, r.C().eval_in<ModP>(a, l)));
    const auto lhs2 = omega_coefficients(p, SolutionKind::second, a, LambdaArg<ModP>{false, l}, count);
    const auto rhs2 = omega_coefficients(r.conjugate_canonical(), SolutionKind::second, a + ModP(-(r.t1p + r.t2p)),
                                         LambdaArg<ModP>{false, l + ModP(r.t1p)}, count);
    REQUIRE(same_up_to_sign(lhs2, rhs2, r.D().eval_in<ModP>(a, l)));
    ++checked;
  }
  MESSAGE("series identities checked on " << checked << " pairs");
}
