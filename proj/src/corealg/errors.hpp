#pragma once

#include <stdexcept>
#include <string>

namespace qw {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_argument : error {
    using error::error;
};

// division by an exactly-zero scalar or polynomial
struct division_by_zero : error {
    using error::error;
};

// an exact division left a nonzero remainder; signals an arithmetic bug upstream
struct inexact_division : error {
    using error::error;
};

// a normalization factor or operator coefficient vanishes at the chosen spec
struct pole_error : error {
    using error::error;
};

// Gram matrix singular at the chosen (q,t); caller picks another spec
struct degenerate_spec : error {
    using error::error;
};

// a table-based difference operator needed an entry outside the supplied table
struct missing_entry : error {
    using error::error;
};

// truncated-series degree budget too small for the requested extraction
struct budget_exhausted : error {
    using error::error;
};

} // namespace qw
