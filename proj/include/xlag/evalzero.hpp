#pragma once

#include <vector>

#include "xlag/exact/linear.hpp"
#include "xlag/maya.hpp"

namespace xlag {

// prod_{i<j} (a_j - a_i); 1 for fewer than two nodes, 0 on a repeated node.
ProductForm vandermonde(const std::vector<LinearForm>& nodes);

// Split index of a decreasing sequence: the number of entries >= bound.
// The 1-based threshold s of the closed forms is this count plus one.
int threshold_count(const std::vector<int>& seq, int bound);

// Omega_{mu,nu}[h^{a}(0, l)] for canonical data, with a = `alpha` and l = `lambda`.
ProductForm eval_first_kind(const Partition& mu, const Partition& nu, const LinearForm& alpha = LinearForm::alpha(),
                            const LinearForm& lambda = LinearForm::lambda());

// Omega_{mu',nu'}[h~^{a}(0, l)] for conjugate canonical data.
ProductForm eval_second_kind(const Partition& mup, const Partition& nup, const LinearForm& alpha = LinearForm::alpha(),
                             const LinearForm& lambda = LinearForm::lambda());

// Omega^{a}_{mu,nu}(0) for canonical data, and the conjugate canonical variant.
ProductForm eval_plain(const Partition& mu, const Partition& nu, const LinearForm& alpha = LinearForm::alpha());
ProductForm eval_plain_conjugate(const Partition& mup, const Partition& nup,
                                 const LinearForm& alpha = LinearForm::alpha());

}  // namespace xlag
