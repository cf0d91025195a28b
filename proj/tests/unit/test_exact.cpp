#include <doctest.h>

#include <random>

#include "xlag/exact/linear.hpp"
#include "xlag/exact/modp.hpp"
#include "xlag/exact/poly.hpp"
#include "xlag/exact/qalpha.hpp"
#include "xlag/exact/rational.hpp"
#include "xlag/exact/series.hpp"
#include "xlag/exact/sturm.hpp"
#include "xlag/exact/upoly.hpp"
#include "xlag/seeds.hpp"

using namespace xlag;

namespace {

RationalFunction random_rf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  auto poly = [&] {
    Poly p;
    for (int i = 0; i < 3; ++i) p += Poly::term(c(rng), i % 2, i / 2 + (i == 2));
    return p;
  };
  Poly den = poly();
  while (den.is_zero()) den = poly();
  return RationalFunction(poly(), den);
}

}  // namespace

TEST_CASE("rationals parse, reduce and render") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(parse_rational("-3/6")) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(factorial(5) == 120);
  CHECK(floor(Rational(-1, 2)) == -1);
}

TEST_CASE("rising and falling factorials") {
  const Poly l = Poly::lambda();
  CHECK(rising_factorial(-l, 2) == l * l - l);
  CHECK(rising_factorial(Poly::alpha() + Poly(1), 0) == Poly(1));
  CHECK(falling_factorial(Poly::alpha(), 2) == Poly::alpha() * (Poly::alpha() - Poly(1)));
  CHECK(falling(LinearForm::alpha(), 2) == ProductForm::of(LinearForm::alpha()) * ProductForm::of(LinearForm::alpha(-1)));
}

TEST_CASE("rising factorial splits as a product of blocks") {
  const LinearForm x = LinearForm::alpha(Rational(1, 3)) + LinearForm::lambda();
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      CHECK(rising(x, m + n) == rising(x, m) * rising(x + Rational(m), n));
      CHECK(rising_factorial(x.to_poly(), static_cast<unsigned>(m + n)) ==
            rising_factorial(x.to_poly(), static_cast<unsigned>(m)) *
                rising_factorial((x + Rational(m)).to_poly(), static_cast<unsigned>(n)));
    }
}

TEST_CASE("rational function field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK(a + (-a) == RationalFunction(0));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.equal_up_to_sign(-a));
  }
}

TEST_CASE("rational functions are stored reduced") {
  const Poly a = Poly::alpha(), l = Poly::lambda();
  const RationalFunction f((a + l) * (a - Poly(1)), (a - Poly(1)) * (l + Poly(2)));
  CHECK(f == RationalFunction(a + l, l + Poly(2)));
  CHECK(f.den().degree_alpha() == 0);
  CHECK(gcd((a + l) * a, a * l) == a);
}

TEST_CASE("product forms normalize and compare up to sign") {
  const LinearForm a = LinearForm::alpha(), l = LinearForm::lambda();
  // 3 - lambda is stored as -(lambda - 3).
  const ProductForm p = ProductForm::of(LinearForm{3, 0, -1}) * ProductForm::of(a);
  CHECK(p.constant() == -1);
  CHECK(p.equal_up_to_sign(ProductForm::of(l - Rational(3)) * ProductForm::of(a)));
  CHECK((p / p) == ProductForm(1));
  CHECK(p.lambda_part() * p.alpha_part() == p);
  CHECK(p.shift_lambda(3).to_rational_function() == (ProductForm(-1) * ProductForm::of(l) * ProductForm::of(a)).to_rational_function());
  CHECK(ProductForm::of(l + a).substitute(a - Rational(1), l + Rational(2)) == ProductForm::of(l + a + Rational(1)));
}

TEST_CASE("modular field arithmetic") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const ModP x = ModP::random(rng), y = ModP::random(rng);
    CHECK(x * x.inv() == ModP(1));
    CHECK((x + y) - y == x);
  }
  CHECK(ModP(Rational(1, 2)) * ModP(2) == ModP(1));
}

TEST_CASE("Q(alpha) arithmetic") {
  const QAlpha a = QAlpha::alpha();
  const QAlpha f = (a + QAlpha(1)) / (a * a - QAlpha(1));
  CHECK(f == QAlpha(1) / (a - QAlpha(1)));
  CHECK(f.shift(1) == QAlpha(1) / a);
}

TEST_CASE("Sturm counts on the half line") {
  // (x - 1)(x - 2)(x + 3)
  const UPoly p = UPoly::linear(-1, 1) * UPoly::linear(-2, 1) * UPoly::linear(3, 1);
  CHECK(count_roots_from(p, 0) == 2);
  CHECK(count_roots_from(p, Rational(3, 2)) == 1);
  CHECK(count_roots_from(p, -5) == 3);
  CHECK(count_roots_from(UPoly::linear(1, 1) * UPoly::linear(1, 1) + UPoly(1), 0) == 0);
  // A double root counts once.
  CHECK(count_roots_from(UPoly::linear(-1, 1) * UPoly::linear(-1, 1), 0) == 1);
  CHECK(descartes_variations(p) == 2);
}

TEST_CASE("series differentiation") {
  using QS = QuasiRationalSeries<RationalFunction>;
  const RationalFunction a(Poly::alpha());
  const int n = 6;
  SUBCASE("power rule on x^{-alpha}") {
    const QS f = QS::term(a, Tag{-1, 0, 0}, Series<RationalFunction>::polynomial({RationalFunction(1)}, n));
    const QS d = f.differentiate();
    REQUIRE(d.tag_count() == 1);
    const auto& [b, s] = d.terms().at({-1, 0});
    CHECK(b == -1);
    CHECK(s[0] == -a);
  }
  SUBCASE("exponential is its own derivative") {
    const QS f = QS::term(a, Tag{0, 0, 1}, Series<RationalFunction>::polynomial({RationalFunction(1)}, n));
    const QS d = f.differentiate();
    const auto& [b, s] = d.terms().at({0, 1});
    // x^{-1} e^x (x * 1) = e^x.
    CHECK(s[0].is_zero());
    CHECK(s[1] == RationalFunction(1));
    CHECK(b == -1);
  }
  SUBCASE("x^{-alpha} L_1^{-alpha} differentiates to (1-alpha) x^{-alpha-1} L_1^{-alpha-1}") {
    const QS f = symbolic_seed({3, 1, 0}, n);
    const QS d = f.differentiate();
    const auto lhs = d.terms().at({-1, 0});
    const auto target = laguerre(1, LinearForm{-1, -1, 0});
    CHECK(lhs.first == -1);
    for (int t = 0; t < 2; ++t) CHECK(lhs.second[t] == (RationalFunction(1) - a) * target[static_cast<std::size_t>(t)]);
  }
  SUBCASE("product rule on random terms") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      auto make = [&] {
        std::vector<RationalFunction> k;
        for (int i = 0; i < 4; ++i) k.push_back(RationalFunction(c(rng)) + RationalFunction(c(rng)) * a);
        return QS::term(a, Tag{c(rng) % 2, 0, c(rng) % 2}, Series<RationalFunction>::polynomial(k, n));
      };
      const QS f = make(), g = make();
      const QS lhs = (f * g).differentiate();
      const QS rhs = f.differentiate() * g + f * g.differentiate();
      const QS diff = lhs - rhs;
      for (const auto& [jk, bs] : diff.terms())
        for (int t = 0; t < bs.second.prec - 2; ++t) CHECK(bs.second[t].is_zero());
    }
  }
}

TEST_CASE("determinants") {
  using QS = QuasiRationalSeries<RationalFunction>;
  const RationalFunction a(Poly::alpha());
  const int n = 6;
  auto poly = [&](std::vector<RationalFunction> c) { return QS::term(a, Tag{}, Series<RationalFunction>::polynomial(c, n)); };
  SUBCASE("1x1 and triangular 2x2") {
    const QS f = poly({RationalFunction(2), a});
    CHECK(laplace_determinant<QS>({{f}}, poly({1})).coefficient(1) == a);
    const QS x = poly({0, 1});
    const QS d = laplace_determinant<QS>({{poly({1}), x}, {poly({}), poly({1})}}, poly({1}));
    CHECK(d.coefficient(0) == RationalFunction(1));
    CHECK(d.coefficient(1).is_zero());
  }
  SUBCASE("Wronskian of L_1^alpha and 1 is the constant 1") {
    const QS l1 = poly({a + RationalFunction(1), RationalFunction(-1)});
    const QS one = poly({1});
    const QS w = laplace_determinant<QS>({{l1, one}, {l1.differentiate(), one.differentiate()}}, one);
    CHECK(w.coefficient(0) == RationalFunction(1));
    for (int t = 1; t < n - 2; ++t) CHECK(w.coefficient(t).is_zero());
  }
  SUBCASE("alternating and multilinear on random rational matrices") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
      for (auto& row : m)
        for (auto& v : row) v = c(rng);
      const Rational d = laplace_determinant(m, Rational(1));
      auto swapped = m;
      std::swap(swapped[0], swapped[2]);
      CHECK(laplace_determinant(swapped, Rational(1)) == -d);
      auto scaled = m;
      for (auto& v : scaled[1]) v *= 3;
      CHECK(laplace_determinant(scaled, Rational(1)) == 3 * d);
    }
  }
}
