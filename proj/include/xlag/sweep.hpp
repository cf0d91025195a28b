#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xlag/exact/linear.hpp"
#include "xlag/maya.hpp"
#include "xlag/oracle.hpp"

namespace xlag {

// All pairs whose four index lists are subsets of {0, ..., max_index - 1}.
std::vector<DiagramPair> enumerate_pairs(int max_index);

struct SweepOptions {
  int max_index = 4;
  int trunc = 0;             // starting series order for the oracle
  int points = 2;            // random (alpha, lambda) points per identity
  std::uint64_t seed = 20240611;
  ProductForm perturbation = 1;  // multiplies every closed form (negative controls)
};

struct SweepMismatch {
  DiagramPair pair;
  SolutionKind kind = SolutionKind::first;
  std::string closed_form;
};

struct SweepResult {
  int pairs = 0;
  int admissible = 0;
  int identities = 0;
  std::vector<SweepMismatch> mismatches;  // sorted, smallest r first
};

// Compares constant times zero evaluation against the oracle for the first kind,
// the second kind and the plain Wronskian, over admissible pairs, up to sign. The
// alpha-lambda identities are tested at random points of F_p with p = 2^61 - 1.
SweepResult oracle_sweep(const SweepOptions& opts);

std::string to_string(SolutionKind k);

}  // namespace xlag
