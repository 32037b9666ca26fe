#include "cterm/cterm.hpp"

#include "corealg/qfuncs.hpp"

namespace qw {

TruncSeries expand_delta_t0(int nvars, int start, int count, long qorder) {
    TruncSeries out = TruncSeries::one(nvars, qorder);
    for (int i = 0; i < count; ++i)
        for (int j = 0; j < count; ++j) {
            if (i == j) continue;
            for (long n = 0; n <= qorder; ++n) {
                TruncSeries factor = TruncSeries::one(nvars, qorder);
                TruncSeries::Exp e(nvars, 0);
                e[start + i] = 1;
                e[start + j] = -1;
                factor.add_term(e, -QLaurent::q_power(n));
                out *= factor;
            }
        }
    return out;
}

TruncSeries kernel_factor(int nvars, int xi, int yj, long qorder, int mcap) {
    TruncSeries out(nvars, qorder);
    for (int m = 0; m <= mcap; ++m) {
        TruncSeries::Exp e(nvars, 0);
        e[xi] += m;
        if (yj >= 0) e[yj] -= m;
        QLaurent den = q_factorial(m);
        out.add_term(e, den.series_inverse(2 * qorder));
    }
    return out;
}

TruncSeries gamma_q_truncated(int nvars, const TruncSeries::Exp& exps, long qorder, int mcap) {
    TruncSeries out(nvars, qorder);
    for (int m = 0; m <= mcap; ++m) {
        TruncSeries::Exp e(nvars, 0);
        for (int v = 0; v < nvars; ++v) e[v] = exps[v] * m;
        out.add_term(e, q_factorial(m).series_inverse(2 * qorder));
    }
    return out;
}

TruncSeries constant_term(const TruncSeries& s, int start, int count) {
    TruncSeries out = s;
    for (int v = start; v < start + count; ++v) out = out.project_zero(v);
    return out;
}

QLaurent scalar_product_prime_t0(const LaurentPoly& f, const LaurentPoly& g, long qorder) {
    if (f.nvars() != g.nvars()) throw invalid_argument("operands disagree in nvars");
    int n = f.nvars();
    // f(x^{-1})
    LaurentPoly finv(n);
    for (const auto& [e, c] : f.terms()) {
        LaurentPoly::Exp e2(n);
        for (int i = 0; i < n; ++i) e2[i] = -e[i];
        finv.add_term(e2, c);
    }
    TruncSeries prod = TruncSeries::from_poly(finv, qorder);
    prod *= TruncSeries::from_poly(g, qorder);
    prod *= expand_delta_t0(n, 0, n, qorder);
    QLaurent ct = constant_term(prod, 0, n).constant_coefficient();
    Rat nfact(1);
    for (int i = 2; i <= n; ++i) nfact *= i;
    return ct.mul_rat(Rat(1) / nfact);
}

TruncSeries t0_recursion_step(const Partition& lambda, int ell, long qorder, int budget_extra) {
    if (lambda.size() > ell) throw invalid_argument("lambda must fit in gl_ell");
    int nx = ell + 1, ny = ell;
    int nvars = nx + ny;  // x block first, then y block

    // P^{gl_l}_lambda(y;q,0) Delta(y|q,0)
    auto& table = MacdonaldTable::shared(SpecPoint::t_zero());
    LaurentPoly Py = table.polynomial(lambda, ny);
    LaurentPoly Pbig(nvars);
    for (const auto& [e, c] : Py.terms()) {
        LaurentPoly::Exp e2(nvars, 0);
        for (int j = 0; j < ny; ++j) e2[nx + j] = e[j];
        Pbig.add_term(e2, c);
    }
    TruncSeries S = TruncSeries::from_poly(Pbig, qorder);
    S *= expand_delta_t0(nvars, nx, ny, qorder);

    // per-y budget: the largest positive y-degree the rest of the integrand offers
    for (int j = 0; j < ny; ++j) {
        int cap = S.max_exponent(nx + j) + budget_extra;
        for (int i = 0; i < nx; ++i) {
            S *= kernel_factor(nvars, i, nx + j, qorder, cap);
            S = S.drop_negative(nx + j);  // the remaining factors only lower y_j
        }
        S = S.project_zero(nx + j);
    }

    // A_l = prod_{m>=1}(1-q^m)^{l-1} * (lambda_l)_q!, truncated
    QLaurent a = QLaurent::one();
    for (int rep = 0; rep < ell - 1; ++rep) {
        QLaurent eul = QLaurent::one();
        for (long m = 1; m <= qorder; ++m) {
            eul *= QLaurent::one() - QLaurent::q_power(m);
            eul = eul.truncate_above(2 * qorder);
        }
        a = (a * eul).truncate_above(2 * qorder);
    }
    a = (a * q_factorial(lambda.part(ell - 1))).truncate_above(2 * qorder);
    Rat lfact(1);
    for (int i = 2; i <= ell; ++i) lfact *= i;
    return S.scaled(a).scaled_rat(Rat(1) / lfact);
}

bool verify_t0_recursion(const Partition& lambda, int ell, long qorder, int budget_extra) {
    TruncSeries got = t0_recursion_step(lambda, ell, qorder, budget_extra);
    auto& table = MacdonaldTable::shared(SpecPoint::t_zero());
    LaurentPoly target = table.polynomial(lambda, ell + 1);
    int nvars = got.nvars();
    TruncSeries expect(nvars, qorder);
    for (const auto& [e, c] : target.terms()) {
        TruncSeries::Exp e2(nvars, 0);
        for (int i = 0; i <= ell; ++i) e2[i] = e[i];
        expect.add_term(e2, c.as_laurent());
    }
    return got == expect;
}

std::pair<Scalar, Scalar> norm_formulas(const Partition& lambda, int rank, const SpecPoint& spec,
                                        long qorder) {
    Partition lam = lambda.padded(rank);
    long n = lam.size();
    Scalar one = Scalar::one();
    Scalar prime = one;
    if (spec.kind() == SpecPoint::Kind::t_zero) {
        // prod_{i<l} prod_{m>=1} 1/(1 - q^{lambda_i - lambda_{i+1} + m})
        for (long i = 1; i <= n - 1; ++i)
            for (long m = 1; m <= qorder; ++m)
                prime /= one - spec.q_pow(lam.part(i - 1) - lam.part(i) + m);
    } else {
        for (long i = 1; i <= n; ++i)
            for (long j = i + 1; j <= n; ++j) {
                long c = lam.part(i - 1) - lam.part(j - 1);
                for (long m = 0; m <= qorder; ++m) {
                    prime *= (one - spec.t_pow(j - i) * spec.q_pow(c + m)) /
                             (one - spec.t_pow(j - i + 1) * spec.q_pow(c + m));
                    prime *= (one - spec.t_pow(j - i) * spec.q_pow(c + m + 1)) /
                             (one - spec.t_pow(j - i - 1) * spec.q_pow(c + m + 1));
                }
            }
    }
    Scalar plain;
    if (spec.kind() == SpecPoint::Kind::t_zero) {
        QLaurent v = QLaurent::one();
        for (long i = 1; i <= n - 1; ++i) v *= q_factorial(lam.part(i - 1) - lam.part(i));
        if (n >= 1) v *= q_factorial(lam.part(n - 1));
        plain = Scalar(v);
    } else {
        plain = macdonald_norm_closed(lam, spec);
    }
    return {prime, plain};
}

} // namespace qw
