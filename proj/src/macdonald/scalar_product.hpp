#pragma once

#include "corealg/laurent_poly.hpp"
#include "macdonald/spec_point.hpp"
#include "macdonald/symfunc.hpp"

namespace qw {

// z_lambda(q,t) = prod_n n^{m_n} m_n! * prod_{lambda_k != 0} (1-q^{lambda_k})/(1-t^{lambda_k})
Scalar z_lambda(const Partition& lambda, const SpecPoint& spec);

// Combinatorial scalar product <pi_a, pi_b> = delta * z_a, extended bilinearly.
// f, g: symmetric polynomials with the same variable count; expansion uses
// power sums with at most nvars parts. For degree <= nvars this is the
// scalar product of symmetric functions.
Scalar scalar_product_qt(const LaurentPoly& f, const LaurentPoly& g, const SpecPoint& spec);

} // namespace qw
