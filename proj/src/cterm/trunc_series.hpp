#pragma once

#include <map>
#include <vector>

#include "corealg/laurent_poly.hpp"
#include "corealg/qlaurent.hpp"

namespace qw {

// Formal series: Laurent monomials in the active variables with coefficients
// that are power series in q truncated above q^N (stored in s, order 2N).
// Every operation re-truncates, so values are exact mod q^{N+1}.
class TruncSeries {
public:
    using Exp = std::vector<int>;
    using Terms = std::map<Exp, QLaurent>;

    TruncSeries(int nvars, long qorder) : nvars_(nvars), order_(qorder) {}
    static TruncSeries one(int nvars, long qorder);
    // from a polynomial whose coefficients are polynomial scalars
    static TruncSeries from_poly(const LaurentPoly& p, long qorder);

    int nvars() const { return nvars_; }
    long qorder() const { return order_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exp& e, const QLaurent& c);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries& operator*=(const TruncSeries& o) { *this = *this * o; return *this; }
    TruncSeries& operator+=(const TruncSeries& o) { *this = *this + o; return *this; }
    TruncSeries scaled(const QLaurent& c) const;
    TruncSeries scaled_rat(const Rat& c) const;

    // keep only terms whose exponent on variable v is zero
    TruncSeries project_zero(int v) const;
    // drop terms with negative exponent on variable v
    TruncSeries drop_negative(int v) const;
    // largest exponent of variable v over all terms (0 when empty)
    int max_exponent(int v) const;

    // the coefficient series of the constant monomial
    QLaurent constant_coefficient() const;

    bool operator==(const TruncSeries& o) const {
        return nvars_ == o.nvars_ && order_ == o.order_ && terms_ == o.terms_;
    }

private:
    void check_compatible(const TruncSeries& o) const;
    int nvars_;
    long order_;
    Terms terms_;
};

} // namespace qw
