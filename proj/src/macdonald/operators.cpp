#include "macdonald/operators.hpp"

#include <functional>

namespace qw {

namespace {

// all r-subsets of {0,..,n-1}, lexicographic
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

} // namespace

LaurentPoly macdonald_op_apply(long r, const LaurentPoly& f, const SpecPoint& spec) {
    int n = f.nvars();
    if (r < 1 || r > n) throw invalid_argument("operator index out of range");
    Scalar t = spec.t();
    Scalar q = spec.q();
    Scalar pref = t.pow(r * (r - 1) / 2);

    LaurentPoly num = LaurentPoly::zero(n);
    LaurentPoly den = LaurentPoly::one(n);
    for (const auto& I : subsets(n, r)) {
        std::vector<bool> in(n, false);
        for (int i : I) in[i] = true;
        LaurentPoly tnum = LaurentPoly::constant(n, pref);
        LaurentPoly tden = LaurentPoly::one(n);
        for (int i : I)
            for (int j = 0; j < n; ++j) {
                if (in[j]) continue;
                tnum *= LaurentPoly::variable(n, i).scaled(t) - LaurentPoly::variable(n, j);
                tden *= LaurentPoly::variable(n, i) - LaurentPoly::variable(n, j);
            }
        LaurentPoly shifted = f;
        for (int i : I) shifted = shifted.substitute_scale(i, q);
        num = num * tden + tnum * shifted * den;
        den = den * tden;
    }
    return num.exact_div(den);
}

Scalar eigenvalue_c(long r, const Partition& lambda, const SpecPoint& spec, int nvars) {
    Partition lam = lambda.padded(nvars);
    Scalar out;
    for (const auto& I : subsets(nvars, r)) {
        Scalar term = Scalar::one();
        for (int i : I) term *= spec.q_pow(lam.parts[i]) * spec.t_pow(nvars - 1 - i);
        out += term;
    }
    return out;
}

LatticeTable dual_macdonald_apply(long r, const LatticeTable& table, const SpecPoint& spec,
                                  bool skip_poles) {
    if (table.empty()) return {};
    int n = static_cast<int>(table.begin()->first.size());
    if (r < 1 || r > n) throw invalid_argument("operator index out of range");
    Scalar pref = spec.t_pow(r * (r - 1) / 2);

    LatticeTable out;
    for (const auto& [lam, value] : table) {
        // xi_i = q^{lambda_i} t^{rho_i}, 2*rho_i = 2 - 2i + (n-1)
        std::vector<Scalar> xi(n);
        for (int i = 0; i < n; ++i)
            xi[i] = spec.q_pow(lam[i]) * spec.t_pow_half(2 - 2 * (i + 1) + (n - 1));
        bool complete = true;
        LaurentPoly acc = LaurentPoly::zero(value.nvars());
        try {
        for (const auto& I : subsets(n, r)) {
            std::vector<bool> in(n, false);
            for (int i : I) in[i] = true;
            Scalar coeff = pref;
            Scalar t = spec.t();
            for (int i : I)
                for (int j = 0; j < n; ++j) {
                    if (in[j]) continue;
                    Scalar d = xi[i] - xi[j];
                    if (d.is_zero())
                        throw pole_error("coinciding spectral values q^l t^rho at lattice point");
                    coeff *= (t * xi[i] - xi[j]) / d;
                }
            if (coeff.is_zero()) continue;  // vanishing coefficient: entry not needed
            std::vector<long> shifted = lam;
            for (int i : I) shifted[i] += 1;
            auto it = table.find(shifted);
            if (it == table.end()) { complete = false; break; }
            acc += it->second.scaled(coeff);
        }
        } catch (const pole_error&) {
            if (!skip_poles) throw;
            complete = false;
        }
        if (complete) out.emplace(lam, std::move(acc));
    }
    return out;
}

LaurentPoly dual_eigenvalue(long r, const SpecPoint& spec, int nvars) {
    Scalar pref = spec.t_pow_half(r * (nvars - 1));
    return elementary_symmetric(r, nvars).scaled(pref);
}

} // namespace qw
