#include "qtoda/whittaker.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "corealg/qfuncs.hpp"
#include "macdonald/symfunc.hpp"

namespace qw {

bool is_dominant(const LatticePoint& p) {
    return is_weakly_decreasing(p);
}

LaurentPoly whittaker_gz(const LatticePoint& p) {
    int n = static_cast<int>(p.size());
    LaurentPoly out(n);
    if (!is_dominant(p)) return out;
    if (n == 0) return LaurentPoly::one(0);

    enumerate_gz(Partition(p), [&](const GZPattern& pat) {
        // z_k ^ (row_sum(k) - row_sum(k-1)), rows 1-based as row index k-1 here
        LaurentPoly::Exp mono(n);
        for (long k = 0; k < n; ++k)
            mono[k] = static_cast<int>(pat.row_sum(k) - pat.row_sum(k - 1));
        QLaurent num = QLaurent::one();
        for (long k = 2; k <= n - 1; ++k) {            // interior rows
            const auto& row = pat.rows[k - 1];
            for (size_t i = 0; i + 1 < row.size(); ++i)
                num *= q_factorial(row[i] - row[i + 1]);
        }
        QLaurent den = QLaurent::one();
        for (long k = 1; k <= n - 1; ++k) {
            const auto& lo = pat.rows[k - 1];
            const auto& up = pat.rows[k];
            for (size_t i = 0; i < lo.size(); ++i)
                den *= q_factorial(up[i] - lo[i]) * q_factorial(lo[i] - up[i + 1]);
        }
        out.add_term(mono, Scalar(std::move(num), std::move(den)));
    });
    return out;
}

namespace {

LaurentPoly whittaker_rec_impl(const LatticePoint& p, int full_n) {
    int n = static_cast<int>(p.size());
    if (n == 1) return LaurentPoly::variable(full_n, 0, static_cast<int>(p[0]));

    // enumerate rows interlacing below p
    LaurentPoly out(full_n);
    LatticePoint row(n - 1);
    long ptotal = std::accumulate(p.begin(), p.end(), 0L);
    std::function<void(int)> rec = [&](int i) {
        if (i == n - 1) {
            QLaurent delta = QLaurent::one();
            for (int j = 0; j + 1 < n - 1; ++j) delta *= q_factorial(row[j] - row[j + 1]);
            QLaurent qden = QLaurent::one();
            for (int j = 0; j < n - 1; ++j)
                qden *= q_factorial(p[j] - row[j]) * q_factorial(row[j] - p[j + 1]);
            long rtotal = std::accumulate(row.begin(), row.end(), 0L);
            LaurentPoly::Exp mono(full_n);
            mono[n - 1] = static_cast<int>(ptotal - rtotal);
            LaurentPoly sub = whittaker_rec_impl(row, full_n);
            out += sub.mul_monomial(mono, Scalar(delta, qden));
            return;
        }
        for (long v = p[i + 1]; v <= p[i]; ++v) {
            row[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

LaurentPoly whittaker_recursive(const LatticePoint& p) {
    int n = static_cast<int>(p.size());
    if (!is_dominant(p)) return LaurentPoly(n);
    return whittaker_rec_impl(p, n);
}

QLaurent whittaker_delta(const LatticePoint& p) {
    QLaurent out = QLaurent::one();
    for (size_t i = 0; i + 1 < p.size(); ++i) out *= q_factorial(p[i] - p[i + 1]);
    return out;
}

LaurentPoly whittaker_normalized(const LatticePoint& p) {
    if (!is_dominant(p)) throw invalid_argument("normalization needs a dominant point");
    LaurentPoly psi = whittaker_gz(p);
    LaurentPoly out = psi.scaled(Scalar(whittaker_delta(p)));
    if (!out.has_nonneg_integer_q_coeffs())
        throw error("normalized Whittaker value escaped Z[q]");
    return out;
}

LaurentPoly fundamental_character_value(long k, long r, int nvars) {
    LaurentPoly::Exp shift(nvars, static_cast<int>(k));
    return elementary_symmetric(r, nvars).mul_monomial(shift, Scalar::one());
}

LatticeTable whittaker_box(const LatticePoint& lo, const LatticePoint& hi, bool normalized) {
    if (lo.size() != hi.size()) throw invalid_argument("box bounds differ in length");
    int n = static_cast<int>(lo.size());
    LatticeTable out;
    LatticePoint p(lo);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            if (normalized) {
                out.emplace(p, is_dominant(p) ? whittaker_normalized(p) : LaurentPoly(n));
            } else {
                out.emplace(p, whittaker_gz(p));
            }
            return;
        }
        for (long v = lo[i]; v <= hi[i]; ++v) {
            p[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

LaurentPoly sl2_psi(long n, bool normalized) {
    LaurentPoly two = normalized && n >= 0 ? whittaker_normalized({n, 0}) : whittaker_gz({n, 0});
    // z1 -> z, z2 -> 1/z
    LaurentPoly out(1);
    for (const auto& [e, c] : two.terms()) out.add_term({e[0] - e[1]}, c);
    return out;
}

bool sl2_discrete_check(long n_lo, long n_hi) {
    auto psi = [&](long n) { return sl2_psi(n, false); };
    auto psit = [&](long n) { return sl2_psi(n, true); };
    LaurentPoly zplus = LaurentPoly::variable(1, 0, 1) + LaurentPoly::variable(1, 0, -1);
    for (long n = std::max(0L, n_lo); n <= n_hi; ++n) {
        LaurentPoly lhs = psi(n - 1) + psi(n + 1).scaled(Scalar(QLaurent::one() - QLaurent::q_power(n + 1)));
        if (!(lhs == zplus * psi(n))) return false;
        LaurentPoly lhs2(1);
        if (n >= 1)  // at n = 0 the backward coefficient 1 - q^0 vanishes
            lhs2 += psit(n - 1).scaled(Scalar(QLaurent::one() - QLaurent::q_power(n)));
        lhs2 += psit(n + 1);
        if (!(lhs2 == zplus * psit(n))) return false;
    }
    return true;
}

bool whittaker_symmetry_check(const LatticePoint& lo, const LatticePoint& hi) {
    int n = static_cast<int>(lo.size());
    auto table = whittaker_box(lo, hi, false);
    std::vector<int> perm(n);
    for (const auto& [p, value] : table) {
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (!(value.permute_vars(perm) == value)) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
}

} // namespace qw
