#pragma once

#include "corealg/qlaurent.hpp"

namespace qw {

// (n)_q! = (1-q)(1-q^2)...(1-q^n); empty product for n = 0
QLaurent q_factorial(long n);

// Gaussian binomial (n choose m)_q; zero for m < 0 or m > n.
// Computed as (n)_q!/((m)_q!(n-m)_q!) with the exact division asserted.
QLaurent q_binomial(long n, long m);

// prod_{j=0}^{n-1} (1 - c*q^(a + j*step)) as a Laurent polynomial in s;
// c*q^a given via an s-exponent twist: factor_j = 1 - coeff*s^(e + 2*step*j)
QLaurent q_pochhammer_s(const Rat& coeff, long s_exp, long step, long n);

} // namespace qw
