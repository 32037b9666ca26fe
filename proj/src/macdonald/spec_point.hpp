#pragma once

#include <string>

#include "corealg/scalar.hpp"

namespace qw {

// Choice of (q,t): exact numeric rationals, symbolic q with t = 0, or
// symbolic q with t = q^{-k}. Symbolic q is the generator s^2 of the
// coefficient ring, so no separate symbol type is needed.
class SpecPoint {
public:
    enum class Kind { numeric, t_zero, t_qk };

    static SpecPoint numeric(const Rat& q, const Rat& t) {
        if (q == 0) throw invalid_argument("numeric spec requires q != 0");
        SpecPoint s;
        s.kind_ = Kind::numeric;
        s.qnum_ = q;
        s.tnum_ = t;
        return s;
    }
    static SpecPoint t_zero() {
        SpecPoint s;
        s.kind_ = Kind::t_zero;
        return s;
    }
    static SpecPoint t_qk(long k) {
        SpecPoint s;
        s.kind_ = Kind::t_qk;
        s.k_ = k;
        return s;
    }

    Kind kind() const { return kind_; }
    long k() const { return k_; }

    Scalar q() const {
        return kind_ == Kind::numeric ? Scalar(qnum_) : Scalar::q_power(1);
    }
    Scalar t() const {
        switch (kind_) {
            case Kind::numeric: return Scalar(tnum_);
            case Kind::t_zero: return Scalar();
            default: return Scalar::s_power(-2 * k_);
        }
    }
    Scalar q_pow(long e) const {
        return kind_ == Kind::numeric ? Scalar(rat_pow(qnum_, e)) : Scalar::q_power(e);
    }
    // t^(e/2); e is twice the desired exponent so half-integer powers of t
    // (from the symmetric rho) stay exact
    Scalar t_pow_half(long e) const {
        switch (kind_) {
            case Kind::numeric: {
                if (e % 2 != 0) throw invalid_argument("half-integer power of numeric t");
                return Scalar(rat_pow(tnum_, e / 2));
            }
            case Kind::t_zero: {
                if (e == 0) return Scalar(1);
                if (e < 0) throw division_by_zero("negative power of t = 0");
                return Scalar();
            }
            default: return Scalar::s_power(-k_ * e);
        }
    }
    Scalar t_pow(long e) const { return t_pow_half(2 * e); }

    std::string key() const {
        switch (kind_) {
            case Kind::numeric: return "q=" + rat_str(qnum_) + ",t=" + rat_str(tnum_);
            case Kind::t_zero: return "t=0";
            default: return "t=q^-" + std::to_string(k_);
        }
    }

private:
    Kind kind_ = Kind::t_zero;
    Rat qnum_, tnum_;
    long k_ = 0;
};

} // namespace qw
