#pragma once

#include <map>

#include "corealg/lattice.hpp"

namespace qw {

// Element of the q-commuting torus algebra with generator pairs
// (X_{k,i}, T_{k,i}), 1 <= i <= k <= ell, satisfying
// T_{k,i} X_{m,j} = q^{[k=m][i=j]} X_{m,j} T_{k,i}. Elements are kept in
// normal form: all X powers to the left of all T powers, with coefficients
// that are Laurent polynomials in the central z_1..z_{ell+1}.
class TorusElem {
public:
    struct Key {
        std::vector<int> xexp, texp;
        bool operator<(const Key& o) const {
            if (xexp != o.xexp) return xexp < o.xexp;
            return texp < o.texp;
        }
        bool operator==(const Key& o) const { return xexp == o.xexp && texp == o.texp; }
    };
    using Terms = std::map<Key, LaurentPoly>;

    explicit TorusElem(int ell);

    static int generator_count(int ell) { return ell * (ell + 1) / 2; }
    // flattened index of the generator pair (k,i), 1 <= i <= k <= ell
    static int generator_index(int k, int i);

    static TorusElem one(int ell);
    static TorusElem coefficient(int ell, const LaurentPoly& c);
    static TorusElem generator_x(int ell, int k, int i);
    static TorusElem generator_t(int ell, int k, int i);

    int ell() const { return ell_; }
    int zvars() const { return ell_ + 1; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TorusElem operator+(const TorusElem& o) const;
    TorusElem operator-(const TorusElem& o) const;
    TorusElem operator*(const TorusElem& o) const;
    TorusElem& operator+=(const TorusElem& o) { *this = *this + o; return *this; }
    TorusElem& operator*=(const TorusElem& o) { *this = *this * o; return *this; }
    TorusElem pow(long n) const;  // n >= 0
    TorusElem scaled(const LaurentPoly& c) const;

    bool operator==(const TorusElem& o) const { return ell_ == o.ell_ && terms_ == o.terms_; }

    // vacuum expectation: every X collapses left, every T right, so each
    // normal monomial contributes its coefficient
    LaurentPoly matrix_element() const;

    // largest z-degree over terms (for the degree bookkeeping checks)
    long z_degree() const;

private:
    void add_term(const Key& k, const LaurentPoly& c);
    int ell_;
    Terms terms_;
};

// f_{n,i} polynomials: f_{n,i} = f_{n-1,i} X_{n-1,i} + z_n f_{n-1,i-1} T_{n-1,i}
// for i < n, with f_{n,0} = 1 and f_{n,n} = z_1..z_n
TorusElem f_poly(int n, int i, int ell);

// <v_-| prod_k f_{l+1,k}^{p_k - p_{k+1}} |v_+> with p_{l+2} = 0; p dominant
LaurentPoly whittaker_matrix_element(const LatticePoint& p);

// (X+T)^n = sum_m binom(n,m)_q X^m T^{n-m} in a one-generator torus
bool q_binomial_identity_check(long n);

// the q-binomial summation identity used to assemble the matrix-element
// representation rank by rank, as an exact identity of torus elements:
// parameters a >= b >= c bound the three lattice entries involved
bool torus_recursion_identity_check(int ell, int k, long a, long b, long c);

} // namespace qw
