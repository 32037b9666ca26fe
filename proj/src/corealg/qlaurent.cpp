#include "corealg/qlaurent.hpp"

#include <sstream>

namespace qw {

bool QLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rat QLaurent::constant() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw error("QLaurent::constant on a non-constant value");
    return terms_.begin()->second;
}

bool QLaurent::is_integer_coeff() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

long QLaurent::min_exp() const {
    if (terms_.empty()) throw error("min_exp of zero");
    return terms_.begin()->first;
}

long QLaurent::max_exp() const {
    if (terms_.empty()) throw error("max_exp of zero");
    return terms_.rbegin()->first;
}

Rat QLaurent::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent out;
    if (a.terms_.empty() || b.terms_.empty()) return out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            long e = ea + eb;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                Rat p = ca * cb;
                if (p != 0) out.terms_.emplace(e, std::move(p));
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

QLaurent QLaurent::operator-() const {
    QLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

QLaurent QLaurent::mul_term(long e, const Rat& c) const {
    QLaurent out;
    if (c == 0) return out;
    for (const auto& [e0, c0] : terms_) out.terms_.emplace(e0 + e, c0 * c);
    return out;
}

bool QLaurent::operator<(const QLaurent& o) const {
    return terms_ < o.terms_;
}

bool QLaurent::try_divide(const QLaurent& den, QLaurent& quot) const {
    if (den.is_zero()) throw division_by_zero("QLaurent division by zero");
    quot = QLaurent();
    if (is_zero()) return true;
    // An exact Laurent quotient has min exponent exactly min(num)-min(den);
    // needing anything below that floor certifies a nonzero remainder.
    const long efloor = min_exp() - den.min_exp();
    const long dtop = den.max_exp();
    const Rat& dlead = den.terms_.rbegin()->second;
    QLaurent rem = *this;
    while (!rem.is_zero()) {
        long e = rem.max_exp() - dtop;
        if (e < efloor) return false;
        Rat c = rem.terms_.rbegin()->second / dlead;
        quot.terms_[e] = c;
        rem -= den.mul_term(e, c);
    }
    return true;
}

QLaurent QLaurent::divide_exact(const QLaurent& den) const {
    QLaurent q;
    if (!try_divide(den, q)) throw inexact_division("QLaurent exact division left a remainder");
    return q;
}

QLaurent QLaurent::gcd(const QLaurent& a, const QLaurent& b) {
    if (a.is_zero() && b.is_zero()) return QLaurent();
    auto normalize = [](QLaurent p) {
        if (p.is_zero()) return p;
        long m = p.min_exp();
        Rat lead = p.terms_.begin()->second;  // coefficient at the lowest exponent
        return p.mul_term(-m, Rat(1) / lead);
    };
    QLaurent x = normalize(a), y = normalize(b);
    // Euclid on ordinary polynomials in s (min_exp 0 after normalization)
    while (!y.is_zero()) {
        // remainder of x by y
        QLaurent rem = x;
        const long dtop = y.max_exp();
        const Rat& dlead = y.terms_.rbegin()->second;
        while (!rem.is_zero() && rem.max_exp() >= dtop) {
            long e = rem.max_exp() - dtop;
            Rat c = rem.terms_.rbegin()->second / dlead;
            rem -= y.mul_term(e, c);
        }
        x = y;
        y = normalize(rem);
    }
    return normalize(x);
}

Rat QLaurent::eval_q(const Rat& q) const {
    Rat out(0);
    for (const auto& [e, c] : terms_) {
        if (e % 2 != 0) throw error("eval_q on a value with odd s-exponent");
        out += c * rat_pow(q, e / 2);
    }
    return out;
}

Rat QLaurent::eval_s(const Rat& s) const {
    Rat out(0);
    for (const auto& [e, c] : terms_) out += c * rat_pow(s, e);
    return out;
}

QLaurent QLaurent::series_inverse(long smax) const {
    if (is_zero() || min_exp() != 0) throw error("series_inverse needs a unit constant term");
    const Rat c0 = terms_.begin()->second;
    // b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k}
    QLaurent inv = QLaurent::s_power(0, Rat(1) / c0);
    for (long n = 1; n <= smax; ++n) {
        Rat acc(0);
        for (const auto& [k, ak] : terms_) {
            if (k <= 0 || k > n) continue;
            Rat b = inv.coeff(n - k);
            if (b != 0) acc += ak * b;
        }
        if (acc != 0) inv.terms_[n] = -acc / c0;
    }
    return inv;
}

QLaurent QLaurent::truncate_above(long smax) const {
    QLaurent out;
    for (const auto& [e, c] : terms_) {
        if (e > smax) break;
        out.terms_.emplace(e, c);
    }
    return out;
}

QLaurent QLaurent::pow(long n) const {
    if (n < 0) throw error("QLaurent::pow with negative exponent");
    QLaurent out = one(), base = *this;
    while (n) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

std::string QLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1 && e != 0);
        if (!unit) os << a.get_str();
        if (e != 0) {
            if (!unit) os << "*";
            if (e % 2 == 0) {
                os << "q";
                if (e != 2) os << "^" << e / 2;
            } else {
                os << "s";
                if (e != 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

} // namespace qw
