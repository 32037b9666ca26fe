#include "cterm/trunc_series.hpp"

namespace qw {

TruncSeries TruncSeries::one(int nvars, long qorder) {
    TruncSeries s(nvars, qorder);
    s.terms_.emplace(Exp(nvars, 0), QLaurent::one());
    return s;
}

TruncSeries TruncSeries::from_poly(const LaurentPoly& p, long qorder) {
    TruncSeries s(p.nvars(), qorder);
    for (const auto& [e, c] : p.terms()) s.add_term(e, c.as_laurent());
    return s;
}

void TruncSeries::add_term(const Exp& e, const QLaurent& c) {
    QLaurent t = c.truncate_above(2 * order_);
    if (t.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, std::move(t));
    } else {
        it->second += t;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
    if (nvars_ != o.nvars_ || order_ != o.order_)
        throw invalid_argument("truncated series operands disagree in shape");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    check_compatible(o);
    TruncSeries out(nvars_, order_);
    Exp e(nvars_);
    const long cap = 2 * order_;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            // coefficient series multiply, truncated
            if (ca.min_exp() + cb.min_exp() > cap) continue;
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, (ca * cb).truncate_above(cap));
        }
    return out;
}

TruncSeries TruncSeries::scaled(const QLaurent& c) const {
    TruncSeries out(nvars_, order_);
    for (const auto& [e, c0] : terms_) out.add_term(e, c0 * c);
    return out;
}

TruncSeries TruncSeries::scaled_rat(const Rat& c) const {
    TruncSeries out(nvars_, order_);
    if (c == 0) return out;
    for (const auto& [e, c0] : terms_) out.add_term(e, c0.mul_rat(c));
    return out;
}

TruncSeries TruncSeries::project_zero(int v) const {
    TruncSeries out(nvars_, order_);
    for (const auto& [e, c] : terms_)
        if (e[v] == 0) out.terms_.emplace(e, c);
    return out;
}

TruncSeries TruncSeries::drop_negative(int v) const {
    TruncSeries out(nvars_, order_);
    for (const auto& [e, c] : terms_)
        if (e[v] >= 0) out.terms_.emplace(e, c);
    return out;
}

int TruncSeries::max_exponent(int v) const {
    int m = 0;
    for (const auto& [e, c] : terms_)
        if (e[v] > m) m = e[v];
    return m;
}

QLaurent TruncSeries::constant_coefficient() const {
    auto it = terms_.find(Exp(nvars_, 0));
    return it == terms_.end() ? QLaurent() : it->second;
}

} // namespace qw
