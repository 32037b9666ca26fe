#pragma once

#include "demazure/weights.hpp"

namespace qw {

// Finitely supported integer combination of affine weights.
using CharSum = std::map<AffineWeight, long long>;

CharSum char_monomial(const AffineWeight& mu, long long c = 1);
CharSum char_add(const CharSum& a, const CharSum& b);
CharSum char_mul_monomial(const CharSum& a, const AffineWeight& mu);
bool char_equal(const CharSum& a, const CharSum& b);

// Demazure operator D_i in closed geometric-sum form, per weight mu with
// m = (mu, alpha_i^v):
//   m >= 0:  sum_{j=0}^{m} e^{mu - j alpha_i}
//   m = -1:  0
//   m <= -2: -sum_{j=1}^{-m-1} e^{mu + j alpha_i}
CharSum demazure_op(int i, const CharSum& c);

// composition of demazure_op along a reduced word applied to e^omega;
// word indices act right to left (so the last entry is applied first)
CharSum demazure_character(const AffineWeight& omega, const std::vector<int>& word);

// pi: e^mu -> q^{deg} prod z_i^{fin_i}; the generator images are
// pi(e^{omega_i}) = z_1..z_i, pi(e^{omega_0}) = 1, pi(e^delta) = q
LaurentPoly pi_homomorphism(const CharSum& c, int nvars);

// Demazure-module route to the normalized Whittaker function at a dominant
// lattice point p: with lambda-dot the reversal of p, the character of
// V_w(omega_0 + rep) satisfies
//   pi(ch) = q^{-c} P_p(z;q,0),   normalized-Psi(p) = q^{+c} pi(ch),
//   c = ((ld,ld) - (rep,rep))/2 >= 0.
// (The exponent signs are fixed by direct computation; see the module tests.)
struct CorSanData {
    LaurentPoly pi_char;      // pi(ch)
    long c2;                  // 2c = (ld,ld) - (rep,rep)
    OrbitData orbit;
};
CorSanData demazure_whittaker_data(const std::vector<long>& p);

// q^{+c} pi(ch): the Demazure-route value of the normalized Whittaker function
LaurentPoly demazure_whittaker_value(const std::vector<long>& p);

} // namespace qw
