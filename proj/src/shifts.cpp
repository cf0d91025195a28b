#include "xlag/shifts.hpp"

#include <algorithm>
#include <cstdlib>

namespace xlag {

namespace {

const LinearForm kAlpha = LinearForm::alpha();
const LinearForm kLambda = LinearForm::lambda();

ProductForm of(const LinearForm& f) { return ProductForm::of(f); }

// prod_{v in list} (v + k alpha + c)
ProductForm product_over(const std::vector<int>& list, const Rational& ka, const Rational& c) {
  ProductForm p(1);
  for (int v : list) p *= of(LinearForm{Rational(v) + c, ka, 0});
  return p;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

void require(bool ok, const char* what) {
  if (!ok) throw ValidationError(what);
}

ProductForm at(const ProductForm& p, int d_alpha, int d_lambda) {
  return p.shift_alpha(Rational(d_alpha)).shift_lambda(Rational(d_lambda));
}

struct Lists {
  const std::vector<int>& n;
  const std::vector<int>& m;
  const std::vector<int>& mp;
  const std::vector<int>& np;
};

Lists lists(const DiagramPair& p) { return {p.m1.included, p.m2.included, p.m2.excluded, p.m1.excluded}; }

DiagramPair moved(const DiagramPair& p, StepCase which) {
  DiagramPair out = p;
  switch (which) {
    case StepCase::a: out.m1 = shift(p.m1, -1); break;
    case StepCase::b: out.m1 = shift(p.m1, 1); break;
    case StepCase::c: out.m2 = shift(p.m2, -1); break;
    case StepCase::d: out.m2 = shift(p.m2, 1); break;
  }
  return out;
}

void check_boundary(const DiagramPair& p, StepCase which) {
  switch (which) {
    case StepCase::a: require(!p.m1.included.empty() && p.m1.included.back() == 0, "case (a) needs n_{r1} = 0"); break;
    case StepCase::b: require(!p.m1.excluded.empty() && p.m1.excluded.back() == 0, "case (b) needs n'_{r4} = 0"); break;
    case StepCase::c: require(!p.m2.included.empty() && p.m2.included.back() == 0, "case (c) needs m_{r2} = 0"); break;
    case StepCase::d: require(!p.m2.excluded.empty() && p.m2.excluded.back() == 0, "case (d) needs m'_{r3} = 0"); break;
  }
}

// Walk bookkeeping shared by both kinds: `step` returns the constant for a single
// (possibly inverse) move at the running parameters.
struct Walker {
  Walk w;
  DiagramPair cur;
  StepResult (*reduce)(const DiagramPair&, StepCase);

  void forward(StepCase which) {
    StepResult s = reduce(cur, which);
    ProductForm k = at(s.constant, w.d_alpha, w.d_lambda);
    w.steps.push_back({which, false, cur, k});
    w.total *= k;
    w.d_alpha += s.d_alpha;
    w.d_lambda += s.d_lambda;
    cur = s.pair;
  }

  // Omega_cur = K(X, params - step)^{-1} Omega_X where X reduces to cur under `which`.
  void backward(StepCase which, const DiagramPair& x) {
    StepResult s = reduce(x, which);
    const ProductForm k = at(s.constant, w.d_alpha - s.d_alpha, w.d_lambda - s.d_lambda).inv();
    w.steps.push_back({which, true, cur, k});
    w.total *= k;
    w.d_alpha -= s.d_alpha;
    w.d_lambda -= s.d_lambda;
    cur = x;
  }
};

}  // namespace

StepCase parse_step_case(const std::string& s) {
  if (s == "a") return StepCase::a;
  if (s == "b") return StepCase::b;
  if (s == "c") return StepCase::c;
  if (s == "d") return StepCase::d;
  throw ValidationError("step case must be one of a, b, c, d");
}

std::string to_string(StepCase c) {
  switch (c) {
    case StepCase::a: return "a";
    case StepCase::b: return "b";
    case StepCase::c: return "c";
    case StepCase::d: return "d";
  }
  return "?";
}

StepResult step_reduce_first(const DiagramPair& pair, StepCase which) {
  check_boundary(pair, which);
  const Lists l = lists(pair);
  StepResult r;
  r.pair = moved(pair, which);
  switch (which) {
    case StepCase::a:
      r.constant = of(-kLambda) / of(kAlpha + Rational(1)) * product_over(l.mp, -1, 0) * product_over(l.np, 0, 1);
      r.d_alpha = 1;
      r.d_lambda = -1;
      break;
    case StepCase::b:
      r.constant = of(kAlpha) * product_over(l.n, 0, 1) * product_over(l.m, 1, 0);
      r.d_alpha = -1;
      r.d_lambda = 1;
      break;
    case StepCase::c:
      r.constant = of(kAlpha + kLambda + Rational(1)) / of(kAlpha + Rational(1)) * product_over(l.mp, 0, 1) *
                   product_over(l.np, -1, 0);
      r.d_alpha = 1;
      break;
    case StepCase::d:
      r.constant = of(kAlpha) * product_over(l.n, 1, 0) * product_over(l.m, 0, 1);
      r.d_alpha = -1;
      break;
  }
  return r;
}

StepResult step_reduce_second(const DiagramPair& pair, StepCase which) {
  check_boundary(pair, which);
  const Lists l = lists(pair);
  StepResult r;
  r.pair = moved(pair, which);
  const ProductForm one_minus_alpha = of(LinearForm{1, -1, 0});
  switch (which) {
    case StepCase::a:
      r.constant = of(-kAlpha) * product_over(l.mp, -1, 0) * product_over(l.np, 0, 1);
      r.d_alpha = 1;
      r.d_lambda = -1;
      break;
    case StepCase::b:
      r.constant = of(kLambda + Rational(1)) / one_minus_alpha * product_over(l.n, 0, 1) * product_over(l.m, 1, 0);
      r.d_alpha = -1;
      r.d_lambda = 1;
      break;
    case StepCase::c:
      r.constant = of(-kAlpha) * product_over(l.mp, 0, 1) * product_over(l.np, -1, 0);
      r.d_alpha = 1;
      break;
    case StepCase::d:
      r.constant = of(-kLambda - kAlpha) / one_minus_alpha * product_over(l.n, 1, 0) * product_over(l.m, 0, 1);
      r.d_alpha = -1;
      break;
  }
  return r;
}

Walk walk_first(const DiagramPair& pair) {
  Walker k{{}, pair, &step_reduce_first};
  while (!k.cur.m1.is_canonical()) {
    if (canonical_shift(k.cur.m1) < 0) {
      k.forward(StepCase::a);
    } else if (!k.cur.m1.filled(-1)) {
      k.forward(StepCase::b);
    } else {
      DiagramPair x = k.cur;
      x.m1 = shift(k.cur.m1, 1);
      k.backward(StepCase::a, x);
    }
  }
  while (!k.cur.m2.is_canonical()) {
    if (canonical_shift(k.cur.m2) < 0) {
      k.forward(StepCase::c);
    } else if (!k.cur.m2.filled(-1)) {
      k.forward(StepCase::d);
    } else {
      DiagramPair x = k.cur;
      x.m2 = shift(k.cur.m2, 1);
      k.backward(StepCase::c, x);
    }
  }
  k.w.target = k.cur;
  return k.w;
}

Walk walk_second(const DiagramPair& pair) {
  Walker k{{}, pair, &step_reduce_second};
  while (!k.cur.m1.is_conjugate_canonical()) {
    if (conjugate_canonical_shift(k.cur.m1) > 0) {
      k.forward(StepCase::b);
    } else if (k.cur.m1.filled(0)) {
      k.forward(StepCase::a);
    } else {
      DiagramPair x = k.cur;
      x.m1 = shift(k.cur.m1, -1);
      k.backward(StepCase::b, x);
    }
  }
  while (!k.cur.m2.is_conjugate_canonical()) {
    if (conjugate_canonical_shift(k.cur.m2) > 0) {
      k.forward(StepCase::d);
    } else if (k.cur.m2.filled(0)) {
      k.forward(StepCase::c);
    } else {
      DiagramPair x = k.cur;
      x.m2 = shift(k.cur.m2, -1);
      k.backward(StepCase::d, x);
    }
  }
  k.w.target = k.cur;
  return k.w;
}

namespace {

ProductForm c3_like(const Lists& l, int sign_alpha) {
  // sign_alpha = -1: prod (m'_k - alpha - n_j) prod (n'_k - alpha - m_j)
  // sign_alpha = +1: prod (n_j + alpha - m'_k) prod (m_j + alpha - n'_k)
  ProductForm p(1);
  for (int nj : l.n)
    for (int mk : l.mp) p *= of(LinearForm{Rational(sign_alpha < 0 ? mk - nj : nj - mk), sign_alpha, 0});
  for (int mj : l.m)
    for (int nk : l.np) p *= of(LinearForm{Rational(sign_alpha < 0 ? nk - mj : mj - nk), sign_alpha, 0});
  Integer c = 1;
  for (int nj : l.n)
    for (int nk : l.np) c *= nj + nk + 1;
  for (int mj : l.m)
    for (int mk : l.mp) c *= mj + mk + 1;
  return p * ProductForm(Rational(c));
}

ProductForm finish(const ProductForm& p, const LinearForm& alpha) { return p.substitute(alpha, kLambda); }

}  // namespace

FirstKindConstants shift_constants_first(const DiagramPair& pair, const LinearForm& alpha) {
  const Lists l = lists(pair);
  FirstKindConstants out;
  out.t1 = canonical_shift(pair.m1);
  out.t2 = canonical_shift(pair.m2);
  out.mu = to_partition(shift(pair.m1, out.t1));
  out.nu = to_partition(shift(pair.m2, out.t2));
  const int t1 = out.t1, t2 = out.t2;

  ProductForm c1(1);
  if (t1 < 0) {
    c1 = rising(-kLambda, -t1) / rising(kAlpha + Rational(1), -t1);
  } else if (t1 > 0) {
    c1 = falling(kAlpha, t1);
    for (int k = 0; k < t1; ++k)
      if (!contains(l.np, k)) c1 /= of(-kLambda - Rational(k + 1));
  }

  ProductForm c2(1);
  if (t2 < 0) {
    c2 = rising(kAlpha + kLambda + Rational(1), -t2) / rising(kAlpha + Rational(1 - t1), -t2);
  } else if (t2 > 0) {
    c2 = falling(kAlpha - Rational(t1), t2);
    for (int k = 0; k < t2; ++k)
      if (!contains(l.mp, k)) c2 /= of(kLambda + kAlpha - Rational(k));
  }

  out.C1 = finish(c1, alpha);
  out.C2 = finish(c2, alpha);
  out.C3 = finish(c3_like(l, -1), alpha);
  return out;
}

SecondKindConstants shift_constants_second(const DiagramPair& pair, const LinearForm& alpha) {
  const Lists l = lists(pair);
  SecondKindConstants out;
  out.t1p = conjugate_canonical_shift(pair.m1);
  out.t2p = conjugate_canonical_shift(pair.m2);
  out.mup = to_conjugate_partition(shift(pair.m1, out.t1p));
  out.nup = to_conjugate_partition(shift(pair.m2, out.t2p));
  const int t1 = out.t1p, t2 = out.t2p;
  const LinearForm one_minus_alpha{1, -1, 0};

  ProductForm d1(1);
  if (t1 < 0) {
    d1 = falling(-kAlpha, -t1);
    for (int k = 0; k < -t1; ++k)
      if (!contains(l.n, k)) d1 /= of(kLambda - Rational(k));
  } else if (t1 > 0) {
    d1 = rising(kLambda + Rational(1), t1) / rising(one_minus_alpha, t1);
  }

  ProductForm d2(1);
  if (t2 < 0) {
    d2 = falling(-kAlpha + Rational(t1), -t2);
    for (int k = 0; k < -t2; ++k)
      if (!contains(l.m, k)) d2 /= of(-kLambda - kAlpha - Rational(1 + k));
  } else if (t2 > 0) {
    d2 = rising(-kLambda - kAlpha, t2) / rising(one_minus_alpha + Rational(t1), t2);
  }

  out.D1 = finish(d1, alpha);
  out.D2 = finish(d2, alpha);
  out.D3 = finish(c3_like(l, 1), alpha);
  return out;
}

PlainConstants shift_constants_plain(const DiagramPair& pair, const LinearForm& alpha) {
  const Lists l = lists(pair);
  return {finish(c3_like(l, -1), alpha), finish(c3_like(l, 1), alpha)};
}

DiagramPair ShiftReport::canonical() const { return {shift(pair.m1, t1), shift(pair.m2, t2)}; }

DiagramPair ShiftReport::conjugate_canonical() const { return {shift(pair.m1, t1p), shift(pair.m2, t2p)}; }

ShiftReport shift_report(const DiagramPair& pair) {
  const FirstKindConstants f = shift_constants_first(pair);
  const SecondKindConstants s = shift_constants_second(pair);
  ShiftReport r;
  r.pair = pair;
  r.t1 = f.t1;
  r.t2 = f.t2;
  r.t1p = s.t1p;
  r.t2p = s.t2p;
  r.mu = f.mu;
  r.nu = f.nu;
  r.mup = s.mup;
  r.nup = s.nup;
  r.C1 = f.C1;
  r.C2 = f.C2;
  r.C3 = f.C3;
  r.D1 = s.D1;
  r.D2 = s.D2;
  r.D3 = s.D3;
  r.alpha_prime = LinearForm::alpha(Rational(-f.t1 - f.t2));
  r.alpha_second = LinearForm::alpha(Rational(-s.t1p - s.t2p));
  r.lambda_shift_first = f.t1;
  r.lambda_shift_second = s.t1p;
  return r;
}

}  // namespace xlag
