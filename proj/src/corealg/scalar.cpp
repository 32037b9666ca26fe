#include "corealg/scalar.hpp"

namespace qw {

Scalar::Scalar(QLaurent num, QLaurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("Scalar with zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = QLaurent::one();
        return;
    }
    if (!den_.is_one()) {
        QLaurent g = QLaurent::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
        // shift den to min_exp 0, constant coefficient +1
        long m = den_.min_exp();
        Rat c = den_.terms().begin()->second;
        if (m != 0 || c != 1) {
            den_ = den_.mul_term(-m, Rat(1) / c);
            num_ = num_.mul_term(-m, Rat(1) / c);
        }
    }
}

const QLaurent& Scalar::as_laurent() const {
    if (!den_.is_one()) throw error("Scalar::as_laurent on a true ratio: " + to_string());
    return num_;
}

Rat Scalar::as_rat() const {
    if (!is_rational()) throw error("Scalar::as_rat on a non-rational value: " + to_string());
    return num_.constant();
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (den_.is_one() && o.den_.is_one()) {
        Scalar r;
        r.num_ = num_ + o.num_;
        return r;
    }
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    if (den_.is_one() && o.den_.is_one()) {
        Scalar r;
        r.num_ = num_ - o.num_;
        return r;
    }
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return Scalar();
    if (den_.is_one() && o.den_.is_one()) {
        Scalar r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.num_.is_zero()) throw division_by_zero("Scalar division by zero");
    if (num_.is_zero()) return Scalar();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Scalar Scalar::inverse() const {
    if (num_.is_zero()) throw division_by_zero("inverse of zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar::one();
    if (is_zero()) {
        if (e < 0) throw division_by_zero("0 raised to a negative power");
        return Scalar();
    }
    Scalar base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Scalar out = Scalar::one();
    while (n) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

bool Scalar::operator==(const Scalar& o) const {
    // canonical form makes structural equality sound; cross-multiplication
    // retained as the definition
    if (num_ == o.num_ && den_ == o.den_) return true;
    return (num_ * o.den_) == (o.num_ * den_);
}

Rat Scalar::eval_q(const Rat& q) const {
    Rat d = den_.eval_q(q);
    if (d == 0) throw pole_error("denominator vanishes at q = " + rat_str(q));
    return num_.eval_q(q) / d;
}

QLaurent Scalar::q_series(long smax) const {
    if (num_.is_zero()) return QLaurent();
    if (den_.is_one()) return num_.truncate_above(smax);
    // den has min_exp 0 and constant +1 by normalization
    long shift = num_.min_exp() < 0 ? num_.min_exp() : 0;
    QLaurent inv = den_.series_inverse(smax - shift);
    return (num_ * inv).truncate_above(smax);
}

std::string Scalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace qw
