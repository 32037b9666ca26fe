#include "corealg/laurent_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qw {

LaurentPoly LaurentPoly::constant(int nvars, Scalar c) {
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Exp(nvars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, Exp e, Scalar c) {
    if (static_cast<int>(e.size()) != nvars) throw invalid_argument("monomial exponent length mismatch");
    LaurentPoly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int power) {
    if (i < 0 || i >= nvars) throw invalid_argument("variable index out of range");
    Exp e(nvars, 0);
    e[i] = power;
    return monomial(nvars, e, Scalar::one());
}

Scalar LaurentPoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar LaurentPoly::as_scalar() const {
    if (terms_.empty()) return Scalar();
    if (terms_.size() != 1) throw error("as_scalar on a non-constant polynomial");
    const auto& [e, c] = *terms_.begin();
    for (int x : e)
        if (x != 0) throw error("as_scalar on a non-constant polynomial");
    return c;
}

void LaurentPoly::add_term(const Exp& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw invalid_argument("operand variable counts differ");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out += o;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    out -= o;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly out(nvars_);
    Exp e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, c0] : terms_) {
        Scalar p = c0 * c;
        if (!p.is_zero()) out.terms_.emplace(e, std::move(p));
    }
    return out;
}

LaurentPoly LaurentPoly::mul_monomial(const Exp& shift, const Scalar& c) const {
    if (static_cast<int>(shift.size()) != nvars_) throw invalid_argument("monomial exponent length mismatch");
    LaurentPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, c0] : terms_) {
        Exp e2 = e;
        for (int i = 0; i < nvars_; ++i) e2[i] += shift[i];
        Scalar p = c0 * c;
        if (!p.is_zero()) out.terms_.emplace(std::move(e2), std::move(p));
    }
    return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& den) const {
    check_compatible(den);
    if (den.is_zero()) throw division_by_zero("polynomial division by zero");
    LaurentPoly quot(nvars_);
    if (is_zero()) return quot;

    // componentwise minimum exponents; in an integral domain the low slice of
    // a product is the product of low slices, so the quotient's minimum in
    // each variable is exactly min(num)-min(den)
    Exp mnum(nvars_), mden(nvars_);
    auto comp_min = [&](const Terms& ts, Exp& m) {
        bool first = true;
        for (const auto& [e, c] : ts) {
            if (first) { m = e; first = false; continue; }
            for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
        }
    };
    comp_min(terms_, mnum);
    comp_min(den.terms_, mden);
    Exp floor(nvars_);
    for (int i = 0; i < nvars_; ++i) floor[i] = mnum[i] - mden[i];

    LaurentPoly rem = *this;
    const auto& dlead = *den.terms_.rbegin();  // lex-leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Exp e(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            e[i] = rlead.first[i] - dlead.first[i];
            if (e[i] < floor[i]) throw inexact_division("polynomial division left a remainder");
        }
        Scalar c = rlead.second / dlead.second;
        quot.add_term(e, c);
        rem -= den.mul_monomial(e, c);
    }
    return quot;
}

LaurentPoly LaurentPoly::substitute_scale(int i, const Scalar& c) const {
    if (i < 0 || i >= nvars_) throw invalid_argument("variable index out of range");
    LaurentPoly out(nvars_);
    for (const auto& [e, c0] : terms_) out.add_term(e, c0 * c.pow(e[i]));
    return out;
}

LaurentPoly LaurentPoly::substitute_value(int i, const Scalar& value) const {
    if (i < 0 || i >= nvars_) throw invalid_argument("variable index out of range");
    LaurentPoly out(nvars_);
    for (const auto& [e, c0] : terms_) {
        Exp e2 = e;
        e2[i] = 0;
        out.add_term(e2, c0 * value.pow(e[i]));
    }
    return out;
}

Scalar LaurentPoly::evaluate(const std::vector<Scalar>& values) const {
    if (static_cast<int>(values.size()) != nvars_) throw invalid_argument("evaluation point length mismatch");
    Scalar out;
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] != 0) term *= values[i].pow(e[i]);
        out += term;
    }
    return out;
}

LaurentPoly LaurentPoly::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_) throw invalid_argument("permutation length mismatch");
    LaurentPoly out(nvars_);
    Exp e2(nvars_);
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) e2[perm[i]] = e[i];
        out.add_term(e2, c);
    }
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

bool LaurentPoly::is_symmetric() const {
    // adjacent transpositions generate the whole symmetric group
    for (int i = 0; i + 1 < nvars_; ++i) {
        std::vector<int> perm(nvars_);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[i], perm[i + 1]);
        if (!(permute_vars(perm) == *this)) return false;
    }
    return true;
}

bool LaurentPoly::has_nonneg_integer_q_coeffs(bool require_nonneg) const {
    for (const auto& [e, c] : terms_) {
        if (!c.is_polynomial()) return false;
        for (const auto& [se, r] : c.num().terms()) {
            if (se < 0 || se % 2 != 0) return false;
            if (r.get_den() != 1) return false;
            if (require_nonneg && r < 0) return false;
        }
    }
    return true;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        for (int i = 0; i < nvars_; ++i) {
            if (it->first[i] == 0) continue;
            std::string name = i < static_cast<int>(names.size()) ? names[i] : "z" + std::to_string(i + 1);
            os << "*" << name;
            if (it->first[i] != 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

} // namespace qw
