#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "xlag/exact/linear.hpp"
#include "xlag/exact/upoly.hpp"
#include "xlag/maya.hpp"
#include "xlag/shifts.hpp"

namespace xlag {

// lambda = q + s * alpha.
struct AffinePoint {
  Rational q = 0;
  Rational s = 0;

  double eval(double alpha) const;
  std::string to_string() const;
  auto operator<=>(const AffinePoint& o) const {
    if (s != o.s) return s < o.s ? std::strong_ordering::less : std::strong_ordering::greater;
    if (q != o.q) return q < o.q ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const AffinePoint& o) const { return q == o.q && s == o.s; }
};

// Root of a normalized lambda-bearing linear form (lambda + c0 + ca alpha).
AffinePoint root_of(const LinearForm& f);

// Returns n >= 0 with p = base + n, if any.
std::optional<long> integer_offset(const AffinePoint& base, const AffinePoint& p);

// Product of a rational part and Gamma factors Gamma(arg)^e, where each arg is
// either lambda-free or of the form -lambda + c0 + ca alpha.
class FactoredMeromorphic {
 public:
  FactoredMeromorphic() = default;
  explicit FactoredMeromorphic(ProductForm rational) : rational_(std::move(rational)) {}
  static FactoredMeromorphic gamma(const LinearForm& arg, int exponent = 1);

  const ProductForm& rational() const { return rational_; }
  const std::map<LinearForm, int>& gammas() const { return gammas_; }
  bool sign_suppressed() const { return sign_suppressed_; }
  void set_sign_suppressed(bool v) { sign_suppressed_ = v; }

  FactoredMeromorphic operator*(const FactoredMeromorphic& o) const;
  FactoredMeromorphic operator/(const FactoredMeromorphic& o) const;
  FactoredMeromorphic inv() const;
  FactoredMeromorphic negated() const;

  // Same function with the lambda-free rational and Gamma content dropped.
  FactoredMeromorphic lambda_part() const;

  double eval(double alpha, double lambda) const;
  std::string to_string() const;
  bool operator==(const FactoredMeromorphic& o) const {
    return rational_ == o.rational_ && gammas_ == o.gammas_ && sign_suppressed_ == o.sign_suppressed_;
  }

 private:
  ProductForm rational_ = ProductForm(1);
  std::map<LinearForm, int> gammas_;
  bool sign_suppressed_ = true;
};

double eval_double(const ProductForm& p, double alpha, double lambda);
double eval_double(const LinearForm& f, double alpha, double lambda);

// All closed-form ingredients of the m-functions for a pair with starting
// parameter `alpha` (an affine expression in the symbol alpha).
struct Pipeline {
  DiagramPair pair;
  LinearForm alpha;
  FirstKindConstants first;
  SecondKindConstants second;
  LinearForm alpha_prime;   // alpha - t1 - t2
  LinearForm alpha_second;  // alpha - t1' - t2'
  LinearForm bold_alpha;    // alpha' + r(mu) + r(nu)
  ProductForm E1;           // Omega_{mu,nu}[h^{alpha'}(0, lambda + t1)]
  ProductForm E2;           // Omega_{mu',nu'}[h~^{alpha''}(0, lambda + t1')]
  ProductForm omega0;       // Omega^{alpha}_{M1,M2}(0) = C3 * plain evaluation

  ProductForm C() const { return first.C1 * first.C2 * first.C3; }
  ProductForm D() const { return second.D1 * second.D2 * second.D3; }
};

Pipeline make_pipeline(const DiagramPair& pair, const LinearForm& alpha = LinearForm::alpha());

LinearForm bold_alpha(const DiagramPair& pair, const LinearForm& alpha = LinearForm::alpha());

// The pair used for the Type I family of degree m at starting parameter alpha - 1.
DiagramPair type_one_pair(int m);

struct OperatorData {
  Pipeline pipeline;
  bool admissible = false;  // mu even
  // Limit-circle at 0 iff -1 < bold_alpha < 1; only known for numeric alpha.
  std::optional<bool> limit_circle;
};

OperatorData operator_data(const DiagramPair& pair, const LinearForm& alpha = LinearForm::alpha(),
                           std::optional<Rational> alpha_value = std::nullopt);

struct Weight {
  LinearForm bold_alpha;
  // Omega^{alpha}_{M1,M2}(x); coefficients are rational functions of alpha.
  std::vector<RationalFunction> omega;
  std::string rendered;
};

// Throws ValidationError for odd mu, std::domain_error if Omega(0) vanishes
// identically. Requires alpha = alpha_symbol + integer offset.
Weight weight(const DiagramPair& pair, const LinearForm& alpha = LinearForm::alpha());

struct NormalizationPair {
  FactoredMeromorphic frakC, frakD;
};

NormalizationPair normalization(const Pipeline& p);
FactoredMeromorphic m_infinity(const Pipeline& p);
FactoredMeromorphic m_zero(const Pipeline& p);

// (1 + tau M) / (tau - M) at numeric arguments, and its rendering.
double m_tau_numeric(const FactoredMeromorphic& m_inf, double tau, double alpha, double lambda);
std::string m_tau_render(const FactoredMeromorphic& m_inf, const std::string& tau);

enum class PoleConvention { paper, strict };
enum class Extension { zero, infinity };

std::string to_string(PoleConvention c);
std::string to_string(Extension e);

// {offset + n : n >= 0, n not in excluded}
struct Family {
  AffinePoint offset;
  std::set<long> excluded;
  bool operator==(const Family&) const = default;
};

struct Spectrum {
  std::vector<Family> families;
  std::vector<AffinePoint> points;

  bool contains(const AffinePoint& p) const;
  // Smallest element at a numeric alpha; nullopt when empty.
  std::optional<double> minimum(double alpha) const;
  // Elements in [lo, hi] at a numeric alpha, sorted.
  std::vector<double> in_window(double alpha, double lo, double hi) const;
  std::string to_string() const;
  bool operator==(const Spectrum&) const = default;
};

// Poles of a factored function under a convention.
Spectrum poles(const FactoredMeromorphic& f, PoleConvention convention = PoleConvention::paper);
Spectrum spectrum(const Pipeline& p, Extension ext, PoleConvention convention = PoleConvention::paper);

bool disjoint(const Spectrum& a, const Spectrum& b);

// The extension with the larger lowest eigenvalue; throws std::domain_error on a tie
// or an empty spectrum.
Extension identify_friedrichs(const Spectrum& s0, const Spectrum& s_inf, double alpha);

// ---------------------------------------------------------------------------
// Numerics.

// Gamma(x) via Boost.Math; throws std::domain_error at poles.
double gamma_numeric(double x);

// M_inf at numeric alpha with its sign chosen so that it increases between poles.
class NumericMFunction {
 public:
  NumericMFunction(const Pipeline& p, double alpha);
  double operator()(double lambda) const { return sign_ * m_.eval(alpha_, lambda); }
  int sign() const { return sign_; }
  // Sorted poles of M_inf inside [lo, hi].
  std::vector<double> poles_in(double lo, double hi) const;

 private:
  FactoredMeromorphic m_;
  Spectrum poles_;
  double alpha_;
  int sign_ = 1;
};

struct LevelRoot {
  double lambda;
  double residual;
};

// Solutions of M_inf(lambda) = tau in [lo, hi]. Throws std::domain_error when an
// endpoint sits on a pole and std::runtime_error when bisection stalls.
std::vector<LevelRoot> eigenvalues_tau_numeric(const Pipeline& p, double alpha, double tau, double lo, double hi);

struct OrthogonalityResult {
  std::vector<int> degrees_used;  // lambda = n values whose polynomial is nonzero
  double worst = 0;               // largest |<P_i,P_j>| / sqrt(<P_i,P_i><P_j,P_j>)
};

// Throws std::domain_error when Omega has a root in [0, inf) or bold_alpha <= -1.
OrthogonalityResult orthogonality_check(const DiagramPair& pair, const Rational& alpha, int count,
                                        const LinearForm& alpha_expr = LinearForm::alpha());

}  // namespace xlag
