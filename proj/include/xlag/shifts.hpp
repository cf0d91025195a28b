#pragma once

#include <string>
#include <vector>

#include "xlag/exact/linear.hpp"
#include "xlag/maya.hpp"

namespace xlag {

// Boundary cases of a one-unit shift:
//   a: n_{r1} = 0, M1 -> M1 - 1     b: n'_{r4} = 0, M1 -> M1 + 1
//   c: m_{r2} = 0, M2 -> M2 - 1     d: m'_{r3} = 0, M2 -> M2 + 1
enum class StepCase { a, b, c, d };

StepCase parse_step_case(const std::string& s);
std::string to_string(StepCase c);

// Omega_{pair}[f^alpha(x, lambda)] = constant * Omega_{result}[f^{alpha + d_alpha}(x, lambda + d_lambda)]
// up to sign, with the constant a product of linear forms in (alpha, lambda).
struct StepResult {
  DiagramPair pair;
  ProductForm constant;
  int d_alpha = 0;
  int d_lambda = 0;
};

// Throws ValidationError if the boundary index named by `which` is not 0.
StepResult step_reduce_first(const DiagramPair& pair, StepCase which);
StepResult step_reduce_second(const DiagramPair& pair, StepCase which);

// One entry of a walk: the case used, whether it was applied backwards, and the
// constant already shifted to the walk's running parameters.
struct WalkStep {
  StepCase which;
  bool inverse = false;
  DiagramPair before;
  ProductForm constant;
};

// Step-by-step walk of M1 and then M2 to canonical (first kind) or conjugate
// canonical (second kind) position. `total` is the product of the step constants.
struct Walk {
  std::vector<WalkStep> steps;
  DiagramPair target;
  ProductForm total;
  int d_alpha = 0;
  int d_lambda = 0;
};

Walk walk_first(const DiagramPair& pair);
Walk walk_second(const DiagramPair& pair);

// Closed-form constants, all up to sign. Each constant is a function of the
// (alpha, lambda) attached to the original pair; `alpha` substitutes an affine
// expression for alpha.
struct FirstKindConstants {
  int t1 = 0, t2 = 0;
  Partition mu, nu;
  ProductForm C1, C2, C3;
};

struct SecondKindConstants {
  int t1p = 0, t2p = 0;
  Partition mup, nup;
  ProductForm D1, D2, D3;
};

FirstKindConstants shift_constants_first(const DiagramPair& pair, const LinearForm& alpha = LinearForm::alpha());
SecondKindConstants shift_constants_second(const DiagramPair& pair, const LinearForm& alpha = LinearForm::alpha());

struct PlainConstants {
  ProductForm C3, D3;
};
PlainConstants shift_constants_plain(const DiagramPair& pair, const LinearForm& alpha = LinearForm::alpha());

struct ShiftReport {
  DiagramPair pair;
  int t1 = 0, t2 = 0, t1p = 0, t2p = 0;
  Partition mu, nu, mup, nup;
  ProductForm C1, C2, C3, D1, D2, D3;
  LinearForm alpha_prime;   // alpha - t1 - t2
  LinearForm alpha_second;  // alpha - t1' - t2'
  int lambda_shift_first = 0;   // t1
  int lambda_shift_second = 0;  // t1'

  ProductForm C() const { return C1 * C2 * C3; }
  ProductForm D() const { return D1 * D2 * D3; }
  // Canonical and conjugate canonical pairs reached by the shifts.
  DiagramPair canonical() const;
  DiagramPair conjugate_canonical() const;
};

ShiftReport shift_report(const DiagramPair& pair);

}  // namespace xlag
