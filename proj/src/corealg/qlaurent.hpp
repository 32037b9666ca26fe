#pragma once

#include <map>
#include <string>

#include "corealg/rational.hpp"

namespace qw {

// Laurent polynomial in s where s^2 = q. All powers of q are stored as powers
// of s so that half-integer q-exponents (from rho_i = 1-i+l/2) need no
// special casing. No zero coefficients are ever stored, so equal values have
// identical term maps.
class QLaurent {
public:
    using Terms = std::map<long, Rat>;

    QLaurent() = default;
    explicit QLaurent(const Rat& c) {
        if (c != 0) terms_[0] = c;
    }
    explicit QLaurent(long c) : QLaurent(Rat(c)) {}

    static QLaurent s_power(long e, const Rat& coeff = Rat(1)) {
        QLaurent p;
        if (coeff != 0) p.terms_[e] = coeff;
        return p;
    }
    static QLaurent q_power(long e, const Rat& coeff = Rat(1)) { return s_power(2 * e, coeff); }
    static QLaurent one() { return QLaurent(1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    // constant term as a rational; only valid when is_constant()
    Rat constant() const;
    bool is_integer_coeff() const;

    long min_exp() const;  // lowest s-exponent; requires nonzero
    long max_exp() const;  // highest s-exponent; requires nonzero
    Rat coeff(long e) const;

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent& operator*=(const QLaurent& o) { *this = *this * o; return *this; }
    QLaurent operator-() const;

    QLaurent mul_term(long e, const Rat& c) const;  // multiply by c*s^e
    QLaurent mul_rat(const Rat& c) const { return mul_term(0, c); }

    bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const QLaurent& o) const { return terms_ != o.terms_; }
    // total order for use as map keys; lexicographic on the term map
    bool operator<(const QLaurent& o) const;

    // exact division; returns false (quot unspecified) when the remainder is nonzero
    bool try_divide(const QLaurent& den, QLaurent& quot) const;
    QLaurent divide_exact(const QLaurent& den) const;

    // monic gcd, normalized to min_exp 0 and constant coefficient +1
    static QLaurent gcd(const QLaurent& a, const QLaurent& b);

    // evaluate with q -> value (requires all s-exponents even)
    Rat eval_q(const Rat& q) const;
    Rat eval_s(const Rat& s) const;

    // truncated multiplicative inverse as a power series in s, mod s^(smax+1);
    // requires min_exp() == 0 and nonzero constant term
    QLaurent series_inverse(long smax) const;
    QLaurent truncate_above(long smax) const;  // drop terms with s-exponent > smax
    QLaurent pow(long n) const;                // n >= 0

    std::string to_string() const;  // human-readable, q-based where even

private:
    Terms terms_;
};

} // namespace qw
