#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "corealg/scalar.hpp"

namespace qw {

// Multivariate Laurent polynomial over exact Scalar coefficients. Terms are
// kept in a map ordered lexicographically by exponent vector, so equal values
// have identical representations.
class LaurentPoly {
public:
    using Exp = std::vector<int>;
    using Terms = std::map<Exp, Scalar>;

    LaurentPoly() : nvars_(0) {}
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly constant(int nvars, Scalar c);
    static LaurentPoly monomial(int nvars, Exp e, Scalar c);
    static LaurentPoly variable(int nvars, int i, int power = 1);
    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly one(int nvars) { return constant(nvars, Scalar::one()); }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Scalar coeff(const Exp& e) const;
    // the whole polynomial as a Scalar; requires no variables present
    Scalar as_scalar() const;

    void add_term(const Exp& e, const Scalar& c);  // accumulate, dropping zeros

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly mul_monomial(const Exp& e, const Scalar& c) const;

    // exact division; throws inexact_division when the remainder is nonzero
    LaurentPoly exact_div(const LaurentPoly& den) const;

    // x_i -> c * x_i
    LaurentPoly substitute_scale(int i, const Scalar& c) const;
    // x_i -> value (a Scalar, e.g. a power of s); variable i becomes inert
    LaurentPoly substitute_value(int i, const Scalar& value) const;
    Scalar evaluate(const std::vector<Scalar>& values) const;
    LaurentPoly permute_vars(const std::vector<int>& perm) const;  // x_i -> x_perm[i]

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    bool is_symmetric() const;
    // coefficients all lie in Z[q] (den 1, integer rationals, even nonneg s-exponents)
    bool has_nonneg_integer_q_coeffs(bool require_nonneg = false) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_compatible(const LaurentPoly& o) const;
    int nvars_;
    Terms terms_;
};

} // namespace qw
