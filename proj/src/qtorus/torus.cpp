#include "qtorus/torus.hpp"

#include "corealg/partition.hpp"
#include "corealg/qfuncs.hpp"

namespace qw {

TorusElem::TorusElem(int ell) : ell_(ell) {
    if (ell < 0) throw invalid_argument("negative rank");
}

int TorusElem::generator_index(int k, int i) {
    if (i < 1 || i > k) throw invalid_argument("generator pair out of range");
    return k * (k - 1) / 2 + (i - 1);
}

TorusElem TorusElem::one(int ell) {
    return coefficient(ell, LaurentPoly::one(ell + 1));
}

TorusElem TorusElem::coefficient(int ell, const LaurentPoly& c) {
    TorusElem e(ell);
    if (c.nvars() != ell + 1) throw invalid_argument("coefficient variable count mismatch");
    if (!c.is_zero()) {
        Key k{std::vector<int>(generator_count(ell), 0), std::vector<int>(generator_count(ell), 0)};
        e.terms_.emplace(std::move(k), c);
    }
    return e;
}

TorusElem TorusElem::generator_x(int ell, int k, int i) {
    TorusElem e(ell);
    if (k > ell) throw invalid_argument("generator row out of range");
    Key key{std::vector<int>(generator_count(ell), 0), std::vector<int>(generator_count(ell), 0)};
    key.xexp[generator_index(k, i)] = 1;
    e.terms_.emplace(std::move(key), LaurentPoly::one(ell + 1));
    return e;
}

TorusElem TorusElem::generator_t(int ell, int k, int i) {
    TorusElem e(ell);
    if (k > ell) throw invalid_argument("generator row out of range");
    Key key{std::vector<int>(generator_count(ell), 0), std::vector<int>(generator_count(ell), 0)};
    key.texp[generator_index(k, i)] = 1;
    e.terms_.emplace(std::move(key), LaurentPoly::one(ell + 1));
    return e;
}

void TorusElem::add_term(const Key& k, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TorusElem TorusElem::operator+(const TorusElem& o) const {
    if (ell_ != o.ell_) throw invalid_argument("rank mismatch");
    TorusElem out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

TorusElem TorusElem::operator-(const TorusElem& o) const {
    if (ell_ != o.ell_) throw invalid_argument("rank mismatch");
    TorusElem out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
}

TorusElem TorusElem::operator*(const TorusElem& o) const {
    if (ell_ != o.ell_) throw invalid_argument("rank mismatch");
    TorusElem out(ell_);
    int ng = generator_count(ell_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            // move T^{a.texp} across X^{b.xexp}: q^{sum texp_g * xexp_g}
            long twist = 0;
            for (int g = 0; g < ng; ++g) twist += static_cast<long>(ka.texp[g]) * kb.xexp[g];
            Key k = ka;
            for (int g = 0; g < ng; ++g) {
                k.xexp[g] += kb.xexp[g];
                k.texp[g] += kb.texp[g];
            }
            out.add_term(k, (ca * cb).scaled(Scalar::q_power(twist)));
        }
    return out;
}

TorusElem TorusElem::pow(long n) const {
    if (n < 0) throw invalid_argument("negative torus power");
    TorusElem out = one(ell_), base = *this;
    while (n) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

TorusElem TorusElem::scaled(const LaurentPoly& c) const {
    TorusElem out(ell_);
    for (const auto& [k, c0] : terms_) out.add_term(k, c0 * c);
    return out;
}

LaurentPoly TorusElem::matrix_element() const {
    LaurentPoly out(ell_ + 1);
    for (const auto& [k, c] : terms_) out += c;
    return out;
}

long TorusElem::z_degree() const {
    long deg = 0;
    for (const auto& [k, c] : terms_)
        for (const auto& [e, s] : c.terms()) {
            long d = 0;
            for (int x : e) d += x;
            deg = std::max(deg, d);
        }
    return deg;
}

TorusElem f_poly(int n, int i, int ell) {
    if (n < 0 || n > ell + 1 || i < 0 || i > n) throw invalid_argument("f index out of range");
    if (i == 0) return TorusElem::one(ell);
    if (i == n) {
        LaurentPoly::Exp e(ell + 1, 0);
        for (int j = 0; j < n; ++j) e[j] = 1;
        return TorusElem::coefficient(ell, LaurentPoly::monomial(ell + 1, e, Scalar::one()));
    }
    LaurentPoly zn = LaurentPoly::variable(ell + 1, n - 1);
    return f_poly(n - 1, i, ell) * TorusElem::generator_x(ell, n - 1, i) +
           (f_poly(n - 1, i - 1, ell) * TorusElem::generator_t(ell, n - 1, i)).scaled(zn);
}

LaurentPoly whittaker_matrix_element(const LatticePoint& p) {
    if (!is_weakly_decreasing(p)) throw invalid_argument("needs a dominant lattice point");
    int n = static_cast<int>(p.size());
    int ell = n - 1;
    TorusElem prod = TorusElem::one(ell);
    for (int k = 1; k <= n; ++k) {
        long expo = p[k - 1] - (k < n ? p[k] : 0);
        if (k == n && expo < 0) {
            // f_{n,n} is the central monomial z_1..z_n; negative powers stay scalar
            LaurentPoly::Exp e(n, static_cast<int>(expo));
            prod = prod.scaled(LaurentPoly::monomial(n, e, Scalar::one()));
            continue;
        }
        prod = prod * f_poly(n, k, ell).pow(expo);
    }
    LaurentPoly out = prod.matrix_element();
    // all nonnegative in-scope exponents
    for (const auto& [key, c] : prod.terms())
        for (int g = 0; g < TorusElem::generator_count(ell); ++g)
            if (key.xexp[g] < 0 || key.texp[g] < 0) throw error("negative generator exponent");
    return out;
}

bool q_binomial_identity_check(long n) {
    // one-generator torus: use ell = 1, generators X_{1,1}, T_{1,1}, z scalars untouched
    TorusElem X = TorusElem::generator_x(1, 1, 1);
    TorusElem T = TorusElem::generator_t(1, 1, 1);
    TorusElem lhs = (X + T).pow(n);
    TorusElem rhs(1);
    for (long m = 0; m <= n; ++m) {
        LaurentPoly c = LaurentPoly::constant(2, Scalar(q_binomial(n, m)));
        rhs += (X.pow(m) * T.pow(n - m)).scaled(c);
    }
    return lhs == rhs;
}

bool torus_recursion_identity_check(int ell, int k, long a, long b, long c) {
    if (!(a >= b && b >= c)) throw invalid_argument("needs a >= b >= c");
    int zn = ell + 1;
    LaurentPoly z_last = LaurentPoly::variable(zn, ell);
    TorusElem X = TorusElem::generator_x(ell, ell, k);
    TorusElem T = TorusElem::generator_t(ell, ell, k);
    TorusElem fk = f_poly(ell, k, ell);
    TorusElem fk1 = f_poly(ell, k - 1, ell);

    TorusElem lhs(ell);
    for (long pl = c; pl <= b; ++pl) {
        LaurentPoly coeff = LaurentPoly::constant(zn, Scalar(q_binomial(b - c, pl - c)));
        LaurentPoly::Exp ze(zn, 0);
        ze[ell] = static_cast<int>(b - pl);
        coeff = coeff.mul_monomial(ze, Scalar::one());
        TorusElem term = fk1.pow(a - pl) * fk.pow(pl - c) * X.pow(pl - c) * T.pow(b - pl);
        lhs += term.scaled(coeff);
    }
    TorusElem rhs = fk1.pow(a - b) * (fk * X + (fk1 * T).scaled(z_last)).pow(b - c);
    return lhs == rhs;
}

} // namespace qw
