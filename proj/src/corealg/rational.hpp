#pragma once

#include <gmpxx.h>
#include <string>

#include "corealg/errors.hpp"

namespace qw {

// Arbitrary-precision rational, always gcd-reduced with positive denominator.
// mpq_class maintains exactly that canonical form.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a", "-a", or "a/b". Throws invalid_argument on malformed input.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw invalid_argument("empty rational literal");
    try {
        Rat r(text);
        if (r.get_den() == 0) throw invalid_argument("zero denominator: " + text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw invalid_argument("malformed rational literal: " + text);
    }
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw division_by_zero("0 raised to a negative power");
        return Rat(0);
    }
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat out(1);
    while (n) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

} // namespace qw
