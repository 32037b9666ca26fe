#pragma once

#include "corealg/lattice.hpp"
#include "macdonald/gram_schmidt.hpp"

namespace qw {

// H_r applied to a symmetric (Laurent) polynomial: subset terms are summed as
// exact fractions over their (x_i - x_j) denominators and the final division
// is asserted exact, so any implementation error fails loudly.
LaurentPoly macdonald_op_apply(long r, const LaurentPoly& f, const SpecPoint& spec);

// c_r(q^lambda) = sum over r-subsets of prod q^{lambda_i} t^{varrho_i}, varrho_i = n-i
Scalar eigenvalue_c(long r, const Partition& lambda, const SpecPoint& spec, int nvars);

// Dual Macdonald operator H^v_r: the rational coefficients of H_r evaluated
// at x = q^lambda t^rho, acting by unit shifts lambda_i -> lambda_i + 1.
// Returns the result on every point whose shifted entries are all present.
// rho_i = 1 - i + (n-1)/2 (symmetric rho), so the spec must support
// half-integer t powers (t = q^{-k} does). Points with coinciding spectral
// values q^{lambda_i} t^{rho_i} have pole coefficients: they are skipped when
// skip_poles is set and raise pole_error otherwise.
LatticeTable dual_macdonald_apply(long r, const LatticeTable& table, const SpecPoint& spec,
                                  bool skip_poles = true);

// eigenvalue of H^v_r: t^{r l / 2} e_r(x)
LaurentPoly dual_eigenvalue(long r, const SpecPoint& spec, int nvars);

} // namespace qw
