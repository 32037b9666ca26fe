#pragma once

#include <string>

#include "corealg/laurent_poly.hpp"

namespace qw {

// Canonical JSON for Laurent-polynomial values:
//   {"vars": ["z1",...],
//    "terms": [{"exp": [..], "coeff": {"s_terms": [[s_exp, num, den], ...]}}]}
// terms are ordered descending-lexicographically by exponent vector (so the
// z1-leading term prints first), s_terms ascending by s-exponent, fractions
// gcd-reduced with positive denominators. True ratio coefficients carry an
// additional "den_s_terms" array. Integers that exceed the doubles-safe range
// are emitted as decimal strings; both forms are accepted on input.
std::string value_to_json(const LaurentPoly& value, const std::vector<std::string>& names = {});

LaurentPoly value_from_json(const std::string& text);

// plain-text rendering for --format text
std::string value_to_text(const LaurentPoly& value, const std::vector<std::string>& names = {});

} // namespace qw
