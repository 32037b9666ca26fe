#pragma once

#include "macdonald/gram_schmidt.hpp"

namespace qw {

// Normalization factor of Phi_lambda at t = q^{-k}: the infinite product of
// the definition telescopes to a finite one,
//   prod_{n>=0} (1-a q^n)/(1-a q^{n+k}) = prod_{n=0}^{k-1} (1-a q^n)   (k > 0)
// and its reciprocal for k < 0. Throws pole_error when a factor vanishes
// (reporting the offending (i,j,n)) and for k = 0 (t = 1).
Scalar phi_normalization_factor(const Partition& lambda, int nvars, long k);

// Phi_lambda as an nvars-variable polynomial at t = q^{-k}, exact in Q(s),
// taking the t -> q^{-k} limit coefficientwise when the weight degenerates
LaurentPoly phi_polynomial_qk(const Partition& lambda, int nvars, long k);

// evaluation point q^{mu - k rho}: x_i = s^{2 mu_i - k (2 - 2i + nvars - 1)}
std::vector<Scalar> duality_point(const Partition& mu, int nvars, long k);

// Phi_lambda evaluated at q^{mu - k rho}, exact in Q(s). Regular weights are
// evaluated directly; when the Gram data degenerates at t = q^{-k} the value
// is obtained as the exact limit t -> q^{-k} through an eps-deformation.
// Throws pole_error when the limit genuinely diverges.
struct PhiValue {
    Scalar value;
    bool via_limit = false;
};
PhiValue phi_at_duality_point(const Partition& lambda, const Partition& mu, long k, int nvars);

struct SelfDualityResult {
    bool equal;
    bool via_limit;      // at least one side needed the deformation limit
    Scalar lhs, rhs;
};
SelfDualityResult self_duality_check(const Partition& lambda, const Partition& mu, long k, int nvars);

// true when every closed-form norm at weight d is finite and nonzero at
// t = q^{-k}; certifies that direct Gram-Schmidt at the point computes the
// generic-t limit
bool weight_regular_at_qk(long d, long k);

} // namespace qw
