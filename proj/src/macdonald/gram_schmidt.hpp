#pragma once

#include <functional>

#include "corealg/gz.hpp"
#include "macdonald/scalar_product.hpp"

namespace qw {

// Gram-Schmidt orthogonalization of the monomial basis at one weight, run in
// the ring of symmetric functions (realized with |lambda| variables, where
// the combinatorial scalar product is the scalar product of symmetric
// functions). Templated over the coefficient field so the same kernel runs
// over exact scalars and over epsilon-deformed series.
template <class F>
struct WeightGS {
    std::vector<Partition> basis;            // all partitions of the weight, ascending lex
    std::vector<std::vector<F>> coords;      // coords[i][j]: coefficient of m_{basis[j]} in P_{basis[i]}
    std::vector<F> norms;                    // <P_i, P_i>
    int index_of(const Partition& p) const {
        Partition t = p.trimmed();
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == t) return static_cast<int>(i);
        return -1;
    }
};

template <class F>
WeightGS<F> gram_schmidt_weight(long d, const std::function<F(const Partition&)>& zval) {
    WeightGS<F> out;
    int nwork = static_cast<int>(d > 0 ? d : 1);
    const SymTransition& tr = sym_transition(d, nwork);
    out.basis = tr.m_basis;
    size_t n = out.basis.size();

    std::vector<F> zs(n);
    for (size_t rho = 0; rho < n; ++rho) zs[rho] = zval(tr.pi_basis[rho]);

    // Gram[i][j] = sum_rho m_to_pi[i][rho] m_to_pi[j][rho] z_rho
    std::vector<std::vector<F>> gram(n, std::vector<F>(n));
    for (size_t rho = 0; rho < n; ++rho)
        for (size_t i = 0; i < n; ++i) {
            if (tr.m_to_pi[i][rho] == 0) continue;
            for (size_t j = i; j < n; ++j) {
                if (tr.m_to_pi[j][rho] == 0) continue;
                F add = zs[rho] * F::from_rat(tr.m_to_pi[i][rho] * tr.m_to_pi[j][rho]);
                gram[i][j] += add;
                if (i != j) gram[j][i] += add;
            }
        }

    out.coords.assign(n, {});
    out.norms.assign(n, F());
    std::vector<std::vector<F>> gram_p(n);  // gram * coords[j], for <m_i, P_j> lookups
    for (size_t idx = 0; idx < n; ++idx) {
        std::vector<F> v(n);
        v[idx] = F::from_rat(Rat(1));
        for (size_t j = 0; j < idx; ++j) {
            F ip = gram_p[j][idx];  // <m_idx, P_j>
            if (ip.is_exact_zero()) continue;
            F c = ip / out.norms[j];
            for (size_t m = 0; m <= j; ++m) {
                if (out.coords[j][m].is_exact_zero()) continue;
                v[m] -= c * out.coords[j][m];
            }
        }
        std::vector<F> gv(n);
        for (size_t i = 0; i < n; ++i) {
            F acc;
            for (size_t m = 0; m <= idx; ++m) {
                if (v[m].is_exact_zero()) continue;
                acc += gram[i][m] * v[m];
            }
            gv[i] = acc;
        }
        F norm;
        for (size_t m = 0; m <= idx; ++m)
            if (!v[m].is_exact_zero()) norm += gv[m] * v[m];
        v.resize(idx + 1);
        out.coords[idx] = std::move(v);
        out.norms[idx] = std::move(norm);
        gram_p[idx] = std::move(gv);
    }
    return out;
}

// Cached Macdonald polynomials at a fixed spec. Polynomials are built once
// per weight as symmetric functions and restricted on demand.
class MacdonaldTable {
public:
    explicit MacdonaldTable(SpecPoint spec) : spec_(std::move(spec)) {}

    // the n-variable Macdonald polynomial P_lambda(x_1..x_n; q, t);
    // throws degenerate_spec if Gram-Schmidt divides by zero at this spec
    LaurentPoly polynomial(const Partition& lambda, int nvars);
    // <P_lambda, P_lambda> of symmetric functions
    Scalar norm(const Partition& lambda);
    // coordinates on the monomial basis of weight |lambda| (symmetric function data)
    const WeightGS<Scalar>& weight_data(long d);

    const SpecPoint& spec() const { return spec_; }

    static MacdonaldTable& shared(const SpecPoint& spec);

private:
    SpecPoint spec_;
    std::map<long, WeightGS<Scalar>> weights_;
};

// P_lambda for a generalized partition (entries may be negative):
// (prod_j x_j^{lambda_n}) * P_{lambda - lambda_n} with lambda_n the last entry
LaurentPoly extend_generalized(const std::vector<long>& lambda, int nvars, MacdonaldTable& table);

// closed-form <P,P> from the finite product formula (lambda a partition)
Scalar macdonald_norm_closed(const Partition& lambda, const SpecPoint& spec);

} // namespace qw
