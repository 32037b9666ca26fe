#pragma once

#include <map>
#include <vector>

#include "corealg/laurent_poly.hpp"
#include "corealg/partition.hpp"

namespace qw {

// m_lambda: sum over distinct monomials with exponent multiset lambda
LaurentPoly monomial_symmetric(const Partition& lambda, int nvars);

// pi_lambda = prod_i pi_{lambda_i}, pi_n = sum_k x_k^n; zero parts dropped
LaurentPoly power_sum(const Partition& lambda, int nvars);

// e_r(x), the elementary symmetric polynomial
LaurentPoly elementary_symmetric(long r, int nvars);

// split into homogeneous components by total degree
std::map<long, LaurentPoly> split_by_degree(const LaurentPoly& f);

// Transition data between the monomial and power-sum bases for homogeneous
// symmetric polynomials of one degree. Rows/columns are indexed by the
// ascending-lex partition lists below; entries are exact rationals and do not
// depend on (q,t), so one table serves every spec.
struct SymTransition {
    long degree;
    int nvars;
    std::vector<Partition> m_basis;   // partitions of degree with length <= nvars
    std::vector<Partition> pi_basis;  // same index set (spec: at most nvars parts)
    // pi_to_m[i][j]: coefficient of m_basis[j] in pi_basis[i]
    std::vector<std::vector<Rat>> pi_to_m;
    // m_to_pi[i][j]: coefficient of pi_basis[j] in m_basis[i]  (inverse transpose data)
    std::vector<std::vector<Rat>> m_to_pi;

    int index_of(const Partition& p) const;
};

const SymTransition& sym_transition(long degree, int nvars);

// m-coordinates of a homogeneous symmetric polynomial; throws invalid_argument
// if f is not symmetric or has negative exponents
std::vector<Scalar> m_coordinates(const LaurentPoly& f, const SymTransition& tr);

} // namespace qw
