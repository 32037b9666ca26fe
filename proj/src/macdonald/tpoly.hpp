#pragma once

#include <vector>

#include "corealg/scalar.hpp"

namespace qw {

// Dense polynomial in the deformation variable t with Scalar coefficients.
// Used to take exact limits t -> q^{-k} of quantities that are rational in t:
// numerator and denominator are assembled as TPoly, common (t - t0) factors
// are divided out, and the remaining values are evaluated.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(Scalar c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }
    static TPoly monomial(long e, Scalar c) {
        TPoly p;
        if (!c.is_zero()) {
            p.c_.assign(e + 1, Scalar());
            p.c_[e] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Scalar& coeff(long e) const {
        static const Scalar zero;
        return e >= 0 && e <= degree() ? c_[e] : zero;
    }

    TPoly operator+(const TPoly& o) const {
        TPoly out;
        out.c_.resize(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < out.c_.size(); ++i) {
            if (i < c_.size()) out.c_[i] += c_[i];
            if (i < o.c_.size()) out.c_[i] += o.c_[i];
        }
        out.trim();
        return out;
    }
    TPoly operator-(const TPoly& o) const { return *this + o.scaled(Scalar(-1)); }
    TPoly operator*(const TPoly& o) const {
        TPoly out;
        if (is_zero() || o.is_zero()) return out;
        out.c_.assign(c_.size() + o.c_.size() - 1, Scalar());
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                if (!o.c_[j].is_zero()) out.c_[i + j] += c_[i] * o.c_[j];
        }
        out.trim();
        return out;
    }
    TPoly& operator+=(const TPoly& o) { *this = *this + o; return *this; }
    TPoly& operator*=(const TPoly& o) { *this = *this * o; return *this; }
    TPoly scaled(const Scalar& s) const {
        TPoly out;
        if (s.is_zero()) return out;
        out.c_ = c_;
        for (auto& x : out.c_) x *= s;
        out.trim();
        return out;
    }

    Scalar eval(const Scalar& t0) const {
        Scalar acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t0 + *it;
        return acc;
    }

    // divide by (t - t0); requires eval(t0) == 0
    TPoly div_linear_exact(const Scalar& t0) const {
        if (is_zero()) return TPoly();
        std::vector<Scalar> q(c_.size() - 1);
        Scalar carry = c_.back();
        for (long i = degree() - 1; i >= 0; --i) {
            q[i] = carry;
            carry = c_[i] + carry * t0;
        }
        if (!carry.is_zero()) throw inexact_division("TPoly division by (t - t0) left a remainder");
        TPoly out;
        out.c_ = std::move(q);
        out.trim();
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

// limit of num/den as t -> t0, clearing common (t - t0) factors; throws
// pole_error when the limit diverges
inline Scalar rational_limit(TPoly num, TPoly den, const Scalar& t0) {
    if (den.is_zero()) throw division_by_zero("limit of a ratio with zero denominator");
    for (;;) {
        Scalar d = den.eval(t0);
        if (!d.is_zero()) return num.eval(t0) / d;
        if (!num.eval(t0).is_zero()) throw pole_error("pole at the specialization point");
        num = num.div_linear_exact(t0);
        den = den.div_linear_exact(t0);
    }
}

} // namespace qw
