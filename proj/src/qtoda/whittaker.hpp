#pragma once

#include "corealg/gz.hpp"
#include "corealg/lattice.hpp"

namespace qw {

bool is_dominant(const LatticePoint& p);

// Whittaker function as the Gelfand-Zetlin sum: for dominant p the sum over
// interlacing patterns of z-monomials weighted by q-factorial ratios; zero
// outside the dominant cone. Coefficients live in Q(q).
LaurentPoly whittaker_gz(const LatticePoint& p);

// same function built by the rank recursion over interlacing rows
LaurentPoly whittaker_recursive(const LatticePoint& p);

// Delta(p) = prod_i (p_i - p_{i+1})_q!
QLaurent whittaker_delta(const LatticePoint& p);

// normalized function Delta(p) * Psi; coefficients are asserted to lie in Z[q]
LaurentPoly whittaker_normalized(const LatticePoint& p);

// (prod_i z_i^k) e_r(z): the value forced at p = (k+1,..,k+1,k,..,k) with r
// raised entries
LaurentPoly fundamental_character_value(long k, long r, int nvars);

// table of Psi (or normalized Psi) over the box lo <= p <= hi componentwise
LatticeTable whittaker_box(const LatticePoint& lo, const LatticePoint& hi, bool normalized);

// Psi at (n,0) with z_1 -> z, z_2 -> 1/z collapsed to one variable
LaurentPoly sl2_psi(long n, bool normalized);

// (T^-1 + (1-q^{n+1}) T) Psi = (z + 1/z) Psi and
// ((1-q^n) T^-1 + T) normalized-Psi = (z + 1/z) normalized-Psi on [n_lo, n_hi]
bool sl2_discrete_check(long n_lo, long n_hi);

// S_n-invariance of Psi over a box of dominant points
bool whittaker_symmetry_check(const LatticePoint& lo, const LatticePoint& hi);

} // namespace qw
