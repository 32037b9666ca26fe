#include "macdonald/gram_schmidt.hpp"

#include <mutex>

namespace qw {

namespace {
std::mutex table_mutex;
}

const WeightGS<Scalar>& MacdonaldTable::weight_data(long d) {
    auto it = weights_.find(d);
    if (it != weights_.end()) return it->second;
    try {
        auto gs = gram_schmidt_weight<Scalar>(
            d, [&](const Partition& rho) { return z_lambda(rho, spec_); });
        it = weights_.emplace(d, std::move(gs)).first;
    } catch (const division_by_zero&) {
        throw degenerate_spec("Gram matrix singular at " + spec_.key() + " for weight " +
                              std::to_string(d));
    }
    // triangularity sanity: coefficients live on dominance-lower partitions
    const auto& gs = it->second;
    for (size_t i = 0; i < gs.basis.size(); ++i)
        for (size_t j = 0; j < gs.coords[i].size(); ++j)
            if (!gs.coords[i][j].is_zero() && !dominates(gs.basis[i], gs.basis[j]))
                throw degenerate_spec("orthogonalization left the dominance cone at " + spec_.key());
    return it->second;
}

LaurentPoly MacdonaldTable::polynomial(const Partition& lambda, int nvars) {
    Partition lam = lambda.trimmed();
    if (!lam.nonnegative()) throw invalid_argument("polynomial() needs a partition; use extend_generalized");
    if (lam.size() > nvars) throw invalid_argument("partition has more parts than variables");
    const auto& gs = weight_data(lam.weight());
    int idx = gs.index_of(lam);
    if (idx < 0) throw error("partition missing from its weight basis");
    LaurentPoly out(nvars);
    for (size_t j = 0; j < gs.coords[idx].size(); ++j) {
        const Scalar& c = gs.coords[idx][j];
        if (c.is_zero()) continue;
        if (gs.basis[j].size() > nvars) continue;  // monomials with too many parts restrict to zero
        out += monomial_symmetric(gs.basis[j], nvars).scaled(c);
    }
    return out;
}

Scalar MacdonaldTable::norm(const Partition& lambda) {
    Partition lam = lambda.trimmed();
    const auto& gs = weight_data(lam.weight());
    int idx = gs.index_of(lam);
    if (idx < 0) throw error("partition missing from its weight basis");
    return gs.norms[idx];
}

MacdonaldTable& MacdonaldTable::shared(const SpecPoint& spec) {
    static std::map<std::string, MacdonaldTable> tables;
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = tables.find(spec.key());
    if (it == tables.end()) it = tables.emplace(spec.key(), MacdonaldTable(spec)).first;
    return it->second;
}

LaurentPoly extend_generalized(const std::vector<long>& lambda, int nvars, MacdonaldTable& table) {
    if (static_cast<int>(lambda.size()) != nvars)
        throw invalid_argument("generalized partition length must equal nvars");
    if (!is_weakly_decreasing(lambda))
        throw invalid_argument("generalized partition must be weakly decreasing");
    long shift = lambda.empty() ? 0 : lambda.back();
    std::vector<long> reduced = lambda;
    for (long& x : reduced) x -= shift;
    LaurentPoly p = table.polynomial(Partition(reduced), nvars);
    if (shift != 0) {
        LaurentPoly::Exp e(nvars, static_cast<int>(shift));
        p = p.mul_monomial(e, Scalar::one());
    }
    return p;
}

Scalar macdonald_norm_closed(const Partition& lambda, const SpecPoint& spec) {
    Partition lam = lambda.trimmed();
    long n = lam.size();
    Scalar out = Scalar::one();
    Scalar one = Scalar::one();
    for (long i = 1; i <= n; ++i)
        for (long k = i; k <= n; ++k) {
            long span = lam.part(k - 1) - lam.part(k);
            for (long m = 1; m <= span; ++m) {
                Scalar num = one - spec.t_pow(k - i) * spec.q_pow(lam.part(i - 1) - lam.part(k) + 1 - m);
                Scalar den = one - spec.t_pow(k + 1 - i) * spec.q_pow(lam.part(i - 1) - lam.part(k) - m);
                out *= num / den;
            }
        }
    return out;
}

} // namespace qw
