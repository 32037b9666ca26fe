#include "qtoda/toda_ops.hpp"

#include <functional>

#include "corealg/qfuncs.hpp"
#include "qtoda/whittaker.hpp"

namespace qw {

namespace {

std::vector<std::vector<int>> subsets(int n, long r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > n) return out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<long>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int table_rank(const LatticeTable& table) {
    if (table.empty()) throw invalid_argument("empty table");
    return static_cast<int>(table.begin()->first.size());
}

// generic subset-difference operator on tables; coeff(I, p) may return a zero
// scalar (term dropped without looking up the shifted entry)
LatticeTable table_operator(long r, const LatticeTable& table,
                            const std::function<Scalar(const std::vector<int>&, const LatticePoint&)>& coeff) {
    int n = table_rank(table);
    if (r < 1 || r > n) throw invalid_argument("operator index out of range");
    auto subs = subsets(n, r);
    LatticeTable out;
    for (const auto& [p, value] : table) {
        LaurentPoly acc(value.nvars());
        bool complete = true;
        for (const auto& I : subs) {
            Scalar c = coeff(I, p);
            if (c.is_zero()) continue;
            LatticePoint shifted = p;
            for (int i : I) shifted[i] += 1;
            auto it = table.find(shifted);
            if (it == table.end()) { complete = false; break; }
            acc += it->second.scaled(c);
        }
        if (complete) out.emplace(p, std::move(acc));
    }
    return out;
}

// coefficient of Eq-comm type: successor-gap factors Xt_i, last index judged
// against n+1
Scalar toda_coeff(const std::vector<int>& I, const LatticePoint& p) {
    int n = static_cast<int>(p.size());
    Scalar c = Scalar::one();
    for (size_t j = 0; j < I.size(); ++j) {
        int i = I[j];                                        // 0-based
        int next = j + 1 < I.size() ? I[j + 1] : n + 1;      // i_{r+1} = n+1 (0-based n+1 means l+2)
        if (next - i == 1) continue;                         // exponent 0
        if (i == n - 1) continue;                            // Xt_n = 1
        c *= Scalar(QLaurent::one() - QLaurent::q_power(p[i] - p[i + 1] + 1));
    }
    return c;
}

// predecessor-gap coefficient with a caller-supplied X_i factor (X_1 = 1)
Scalar predecessor_coeff(const std::vector<int>& I, const std::function<Scalar(int)>& factor) {
    Scalar c = Scalar::one();
    for (size_t j = 0; j < I.size(); ++j) {
        int i = I[j];
        if (i == 0) continue;                                 // X_1 = 1
        if (j > 0 && i - I[j - 1] == 1) continue;             // exponent 0
        c *= factor(i);
    }
    return c;
}

} // namespace

LatticeTable toda_apply(long r, const LatticeTable& table) {
    return table_operator(r, table, [](const std::vector<int>& I, const LatticePoint& p) {
        return toda_coeff(I, p);
    });
}

LaurentPoly toda_apply_point(long r, const LatticePoint& p, const LatticeTable& table) {
    int n = static_cast<int>(p.size());
    if (r < 1 || r > n) throw invalid_argument("operator index out of range");
    LaurentPoly acc(n);
    for (const auto& I : subsets(n, r)) {
        Scalar c = toda_coeff(I, p);
        if (c.is_zero()) continue;
        LatticePoint shifted = p;
        for (int i : I) shifted[i] += 1;
        auto it = table.find(shifted);
        if (it == table.end()) throw missing_entry("Toda stencil needs an entry outside the table");
        acc += it->second.scaled(c);
    }
    return acc;
}

LaurentPoly toda_dual_x_apply(long r, const LaurentPoly& f) {
    int n = f.nvars();
    if (r < 1 || r > n) throw invalid_argument("operator index out of range");
    Scalar q = Scalar::q_power(1);
    LaurentPoly out(n);
    for (const auto& I : subsets(n, r)) {
        // X_i = 1 - x_{i-1}^{-1} x_i as a Laurent polynomial coefficient
        LaurentPoly coeff = LaurentPoly::one(n);
        bool zero = false;
        for (size_t j = 0; j < I.size(); ++j) {
            int i = I[j];
            if (i == 0) continue;
            if (j > 0 && i - I[j - 1] == 1) continue;
            LaurentPoly::Exp e(n, 0);
            e[i - 1] = -1;
            e[i] = 1;
            coeff *= LaurentPoly::one(n) - LaurentPoly::monomial(n, e, Scalar::one());
            if (coeff.is_zero()) { zero = true; break; }
        }
        if (zero) continue;
        LaurentPoly shifted = f;
        for (int i : I) shifted = shifted.substitute_scale(i, q);
        out += coeff * shifted;
    }
    return out;
}

LatticeTable toda_dual_x_on_lambda_table(long r, const LatticeTable& table) {
    int n = table_rank(table);
    if (r < 1 || r > n) throw invalid_argument("operator index out of range");
    // x-variable i (0-based) reads q^{lambda[n-1-i] + varrho[n-1-i]}, so
    // X_i = 1 - x_{i-1}^{-1} x_i = 1 - q^{lambda[n-1-i] - lambda[n-i] + 1}
    // and T_{x_i} shifts lambda[n-1-i]
    auto subs = subsets(n, r);
    LatticeTable out;
    for (const auto& [lam, value] : table) {
        LaurentPoly acc(value.nvars());
        bool complete = true;
        for (const auto& I : subs) {
            Scalar c = Scalar::one();
            for (size_t j = 0; j < I.size(); ++j) {
                int i = I[j];
                if (i == 0) continue;
                if (j > 0 && i - I[j - 1] == 1) continue;
                c *= Scalar(QLaurent::one() - QLaurent::q_power(lam[n - 1 - i] - lam[n - i] + 1));
            }
            if (c.is_zero()) continue;
            LatticePoint shifted = lam;
            for (int i : I) shifted[n - 1 - i] += 1;
            auto it = table.find(shifted);
            if (it == table.end()) { complete = false; break; }
            acc += it->second.scaled(c);
        }
        if (complete) out.emplace(lam, std::move(acc));
    }
    return out;
}

LaurentPoly hat_x_apply(long r, const LaurentPoly& f) {
    int n = f.nvars();
    if (r < 1 || r > n) throw invalid_argument("operator index out of range");
    Scalar q = Scalar::q_power(1);
    LaurentPoly num = LaurentPoly::zero(n);
    LaurentPoly den = LaurentPoly::one(n);
    for (const auto& I : subsets(n, r)) {
        std::vector<bool> in(n, false);
        for (int i : I) in[i] = true;
        LaurentPoly tnum = LaurentPoly::one(n);
        LaurentPoly tden = LaurentPoly::one(n);
        for (int i : I)
            for (int j = 0; j < n; ++j) {
                if (in[j]) continue;
                tnum *= LaurentPoly::variable(n, j);
                tden *= LaurentPoly::variable(n, j) - LaurentPoly::variable(n, i);
            }
        LaurentPoly shifted = f;
        for (int i : I) shifted = shifted.substitute_scale(i, q);
        num = num * tden + tnum * shifted * den;
        den = den * tden;
    }
    return num.exact_div(den);
}

LatticeTable hat_dual_apply(long r, const LatticeTable& table) {
    return table_operator(r, table, [](const std::vector<int>& I, const LatticePoint& lam) {
        return predecessor_coeff(I, [&](int i) {
            return Scalar(QLaurent::one() - QLaurent::q_power(lam[i - 1] - lam[i]));
        });
    });
}

LatticeTable spectral_dual_apply(long r, const LatticeTable& table) {
    int n = table_rank(table);
    Scalar pref = Scalar::q_power(r * (r - 1) / 2);
    return table_operator(r, table, [&, n](const std::vector<int>& I, const LatticePoint& lam) {
        std::vector<bool> in(n, false);
        for (int i : I) in[i] = true;
        Scalar c = pref;
        for (int i : I)
            for (int j = 0; j < n; ++j) {
                if (in[j]) continue;
                if (lam[j] == lam[i])
                    throw pole_error("coinciding lattice entries in spectral dual operator");
                Scalar den = Scalar::q_power(lam[j]) - Scalar::q_power(lam[i]);
                c *= Scalar::q_power(lam[j]) / den;
            }
        return c;
    });
}

LatticeTable conjugate_by_delta(const LatticeTable& table, bool inverse) {
    LatticeTable out;
    for (const auto& [lam, value] : table) {
        if (!is_dominant(lam)) throw invalid_argument("Delta conjugation needs dominant points");
        Scalar d{whittaker_delta(lam)};
        out.emplace(lam, value.scaled(inverse ? Scalar::one() / d : d));
    }
    return out;
}

} // namespace qw
