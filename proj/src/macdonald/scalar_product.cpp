#include "macdonald/scalar_product.hpp"

namespace qw {

Scalar z_lambda(const Partition& lambda, const SpecPoint& spec) {
    if (!lambda.nonnegative()) throw invalid_argument("z_lambda needs nonnegative parts");
    Rat combinatorial(1);
    long repeat = 1;
    const auto& parts = lambda.trimmed().parts;
    for (size_t i = 0; i < parts.size(); ++i) {
        // n^{m_n} m_n! accumulated as a running product over equal runs
        repeat = (i > 0 && parts[i] == parts[i - 1]) ? repeat + 1 : 1;
        combinatorial *= Rat(parts[i]) * Rat(repeat);
    }
    Scalar out{combinatorial};
    Scalar one = Scalar::one();
    for (long part : parts)
        out *= (one - spec.q_pow(part)) / (one - spec.t_pow(part));
    return out;
}

Scalar scalar_product_qt(const LaurentPoly& f, const LaurentPoly& g, const SpecPoint& spec) {
    if (f.nvars() != g.nvars()) throw invalid_argument("scalar product operands differ in nvars");
    if (!f.is_symmetric() || !g.is_symmetric())
        throw invalid_argument("scalar product needs symmetric inputs");
    auto fd = split_by_degree(f);
    auto gd = split_by_degree(g);
    Scalar out;
    for (const auto& [d, fpart] : fd) {
        auto it = gd.find(d);
        if (it == gd.end()) continue;  // distinct degrees are orthogonal
        const SymTransition& tr = sym_transition(d, f.nvars());
        auto fm = m_coordinates(fpart, tr);
        auto gm = m_coordinates(it->second, tr);
        size_t n = tr.m_basis.size();
        for (size_t rho = 0; rho < n; ++rho) {
            Scalar fp, gp;
            for (size_t j = 0; j < n; ++j) {
                if (!fm[j].is_zero() && tr.m_to_pi[j][rho] != 0) fp += Scalar(tr.m_to_pi[j][rho]) * fm[j];
                if (!gm[j].is_zero() && tr.m_to_pi[j][rho] != 0) gp += Scalar(tr.m_to_pi[j][rho]) * gm[j];
            }
            if (!fp.is_zero() && !gp.is_zero())
                out += fp * gp * z_lambda(tr.pi_basis[rho], spec);
        }
    }
    return out;
}

} // namespace qw
