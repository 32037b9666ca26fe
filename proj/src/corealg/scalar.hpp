#pragma once

#include <string>

#include "corealg/qlaurent.hpp"

namespace qw {

// Exact coefficient: a ratio num/den of Laurent polynomials in s (s^2 = q).
// Canonical form: gcd-reduced, den shifted to min_exp 0 with its constant
// coefficient scaled to +1. Plain rationals and Laurent polynomials are the
// den == 1 special cases, so one type covers the whole coefficient tower.
class Scalar {
public:
    Scalar() : num_(), den_(QLaurent::one()) {}
    explicit Scalar(const Rat& c) : num_(c), den_(QLaurent::one()) {}
    explicit Scalar(long c) : num_(c), den_(QLaurent::one()) {}
    explicit Scalar(QLaurent p) : num_(std::move(p)), den_(QLaurent::one()) {}
    Scalar(QLaurent num, QLaurent den);  // normalizes

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar from_rat(const Rat& r) { return Scalar(r); }
    static Scalar s_power(long e) { return Scalar(QLaurent::s_power(e)); }
    static Scalar q_power(long e) { return Scalar(QLaurent::q_power(e)); }

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_exact_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }   // QLaurent kind
    bool is_rational() const { return den_.is_one() && num_.is_constant(); }
    // den == 1 required; the QLaurent value
    const QLaurent& as_laurent() const;
    Rat as_rat() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    Scalar inverse() const;
    Scalar pow(long e) const;  // any integer exponent

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const {  // arbitrary total order for map keys
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    // evaluate at numeric q (all s-exponents must be even)
    Rat eval_q(const Rat& q) const;

    // power-series expansion in s, exact mod s^(smax+1); den must not vanish at s=0
    QLaurent q_series(long smax) const;

    std::string to_string() const;

private:
    void normalize();
    QLaurent num_, den_;
};

inline Scalar operator*(const Rat& c, const Scalar& x) { return Scalar(c) * x; }

} // namespace qw
