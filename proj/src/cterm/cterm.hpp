#pragma once

#include "cterm/trunc_series.hpp"
#include "macdonald/gram_schmidt.hpp"

namespace qw {

// Delta(x|q,0) = prod_{i != j} prod_{n >= 0} (1 - x_i x_j^{-1} q^n) expanded
// over the variable block [start, start+count) of an nvars-variable series;
// factors with n > qorder are omitted (they are 1 mod q^{qorder+1})
TruncSeries expand_delta_t0(int nvars, int start, int count, long qorder);

// per-variable caps on the kernel exponents; derived from the maximal
// positive y-degrees available in the rest of the integrand
struct DegreeBudget {
    std::vector<int> cap;  // one entry per y variable
};

// Single kernel factor prod_{n>=0} 1/(1 - u q^n) = sum_m u^m / (q)_m with
// u = x_a * x_b^{-1} (b < 0 means plain x_a), m capped by mcap.
TruncSeries kernel_factor(int nvars, int xi, int yj, long qorder, int mcap);

// Gamma_q of a monomial u: Gamma_q(u) = 1/prod_{j>=0}(1 - u q^j), truncated;
// exps gives u's exponent vector
TruncSeries gamma_q_truncated(int nvars, const TruncSeries::Exp& exps, long qorder, int mcap);

// constant term in the variable block [start, start+count)
TruncSeries constant_term(const TruncSeries& s, int start, int count);

// <f,g>'_{q,t=0} = (1/n!) CT[ f(x^{-1}) g(x) Delta(x|q,0) ] as a q-series
QLaurent scalar_product_prime_t0(const LaurentPoly& f, const LaurentPoly& g, long qorder);

// One step of the t=0 recursion: returns
//   (A_l / l!) CT_y[ C_{l+1,l}(x, y^{-1}|q,0) P^{gl_l}_lambda(y;q,0) Delta(y|q,0) ]
// as a series in x_1..x_{l+1} mod q^{qorder+1}. budget_extra widens every
// kernel cap (for the stability check).
TruncSeries t0_recursion_step(const Partition& lambda, int ell, long qorder, int budget_extra = 0);

// checks the recursion output against P^{gl_{l+1}}_lambda(x;q,0) mod q^{qorder+1}
bool verify_t0_recursion(const Partition& lambda, int ell, long qorder, int budget_extra = 0);

// (<P,P>', <P,P>) from the closed formulas for rank-many variables; the
// infinite products in the primed norm are truncated at qorder factors (exact
// mod q^{qorder+1} at symbolic specs). The unprimed norm is exact and does
// not depend on the rank once it covers the partition length.
std::pair<Scalar, Scalar> norm_formulas(const Partition& lambda, int rank, const SpecPoint& spec,
                                        long qorder);

} // namespace qw
