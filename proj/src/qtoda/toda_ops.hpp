#pragma once

#include "corealg/lattice.hpp"

namespace qw {

// q-Toda Hamiltonian H_r on tables over Z^n: the subset sum with coefficients
// Xt_i = 1 - q^{p_i - p_{i+1} + 1} (Xt_n = 1), a factor appearing for each
// subset element not followed by its successor, and unit shifts p_i -> p_i+1.
// Returns values at every point whose needed shifted entries are present.
LatticeTable toda_apply(long r, const LatticeTable& table);

// single-point application; throws missing_entry when the stencil leaves the table
LaurentPoly toda_apply_point(long r, const LatticePoint& p, const LatticeTable& table);

// position-space dual Toda operator on Laurent polynomials:
// X_i = 1 - x_{i-1}^{-1} x_i (X_1 = 1), factor for each subset element not
// preceded by its predecessor, T_{x_i}: x_i -> q x_i
LaurentPoly toda_dual_x_apply(long r, const LaurentPoly& f);

// the same operator acting on lambda-tables through x_i = q^{lambda_{n+1-i} + varrho_{n+1-i}}
LatticeTable toda_dual_x_on_lambda_table(long r, const LatticeTable& table);

// limit Hamiltonian hat-H_r on Laurent polynomials:
// sum_I prod_{i in I, j notin I} x_j/(x_j - x_i) prod_{i in I} T_{x_i};
// assembled over a common denominator with the final division asserted exact
LaurentPoly hat_x_apply(long r, const LaurentPoly& f);

// spectral-side limit operator hat-H^v_r on lambda-tables:
// coefficients Xh_i = 1 - q^{lambda_{i-1} - lambda_i} (Xh_1 = 1), factor for
// each subset element not preceded by its predecessor, shifts lambda_i -> lambda_i + 1
LatticeTable hat_dual_apply(long r, const LatticeTable& table);

// spectral-side dual of the first limit:
// q^{r(r-1)/2} sum_I prod_{i in I, j notin I} q^{lambda_j}/(q^{lambda_j}-q^{lambda_i}) prod T_i;
// requires distinct entries wherever a coefficient is evaluated
LatticeTable spectral_dual_apply(long r, const LatticeTable& table);

// multiply every table entry by Delta(lambda)^{+1/-1} = prod (lambda_i - lambda_{i+1})_q!^{+1/-1}
LatticeTable conjugate_by_delta(const LatticeTable& table, bool inverse);

} // namespace qw
