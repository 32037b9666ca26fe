#include "macdonald/phi.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "macdonald/tpoly.hpp"

namespace qw {

namespace {

// s-exponent of t^{sum lambda_i rho_i} at t = q^{-k}; 2 rho_i = 2 - 2i + (n-1)
long rho_twist_s_exp(const Partition& lambda, int nvars, long k) {
    long acc = 0;
    for (int i = 1; i <= nvars; ++i) acc += lambda.part(i - 1) * (2 - 2 * i + nvars - 1);
    return -k * acc;
}

} // namespace

Scalar phi_normalization_factor(const Partition& lambda, int nvars, long k) {
    if (k == 0) throw pole_error("t = 1 (k = 0) is excluded: the normalization product vanishes");
    Partition lam = lambda.padded(nvars);
    Scalar out = Scalar::s_power(rho_twist_s_exp(lambda, nvars, k));
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            // gap-graded factors: pair (i,j) carries t^{j-i} and t^{j-i+1}
            // (the rank-two form of the definition extends this way; the
            // ungraded form breaks the evaluation symmetry at three variables)
            long a = j - i;
            long c = lam.parts[i] - lam.parts[j];
            if (k > 0) {
                for (long n = 0; n < k; ++n) {
                    long e = c - k * (a + 1) + n;
                    if (e == 0) {
                        std::ostringstream os;
                        os << "vanishing normalization factor at (i,j,n) = (" << i + 1 << ","
                           << j + 1 << "," << n << ")";
                        throw pole_error(os.str());
                    }
                    out *= Scalar::one() - Scalar::q_power(e);
                }
            } else {
                for (long n = 0; n < -k; ++n) {
                    long e = c - k * a + n;  // always > 0 for a partition; kept for generality
                    if (e == 0) throw pole_error("vanishing denominator in normalization (k < 0)");
                    out /= Scalar::one() - Scalar::q_power(e);
                }
            }
        }
    return out;
}

std::vector<Scalar> duality_point(const Partition& mu, int nvars, long k) {
    std::vector<Scalar> x(nvars);
    for (int i = 1; i <= nvars; ++i)
        x[i - 1] = Scalar::s_power(2 * mu.part(i - 1) - k * (2 - 2 * i + nvars - 1));
    return x;
}

bool weight_regular_at_qk(long d, long k) {
    for (const auto& nu : partitions_of(d, d > 0 ? d : 1)) {
        long n = nu.size();
        for (long i = 1; i <= n; ++i)
            for (long kk = i; kk <= n; ++kk) {
                long span = nu.part(kk - 1) - nu.part(kk);
                for (long m = 1; m <= span; ++m) {
                    // s-exponents of the closed-form norm factors at t = q^{-k}
                    long num_e = -2 * k * (kk - i) + 2 * (nu.part(i - 1) - nu.part(kk) + 1 - m);
                    long den_e = -2 * k * (kk + 1 - i) + 2 * (nu.part(i - 1) - nu.part(kk) - m);
                    if (num_e == 0 || den_e == 0) return false;
                }
            }
    }
    return true;
}

namespace {

// Normalization in the continuity convention: the value of the infinite
// product as the limit t -> q^{-k}. For each pair with c = lambda_i-lambda_j
// <= k the product has a matched zero/pole factor pair whose limit is
// (1 + t q^k) -> 2, so the limit equals 2^{#pairs with c <= k} times the
// formally telescoped product. Zeros (c in [k+1, 2k]) are genuine values.
// The identities connecting Phi across different lambda hold in exactly this
// convention, being limits of generic-t identities.
Scalar phi_factor_value(const Partition& lambda, int nvars, long k) {
    Partition lam = lambda.padded(nvars);
    Scalar out = Scalar::s_power(rho_twist_s_exp(lambda, nvars, k));
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            long a = j - i;
            long c = lam.parts[i] - lam.parts[j];
            if (k > 0) {
                // matched zero/pole pair resolves to (a+1)/a when c <= k*a
                if (c <= k * a) out *= Scalar(Rat(a + 1, a));
                for (long n = 0; n < k; ++n)
                    out *= Scalar::one() - Scalar::q_power(c - k * (a + 1) + n);
            } else {
                for (long n = 0; n < -k; ++n)
                    out /= Scalar::one() - Scalar::q_power(c - k * a + n);
            }
        }
    return out;
}

// lambda-independent infinite part of the normalization as the t -> q^{-k}
// limit: each pair at gap a carries its matched zero/pole resolution (a+1)/a
Scalar n0_factor(int nvars, long k) {
    Scalar out = Scalar::one();
    for (long a = 1; a <= nvars - 1; ++a) {
        Scalar f = Scalar::one();
        if (k > 0) {
            f *= Scalar(Rat(a + 1, a));
            for (long n = 0; n < k; ++n) f *= Scalar::one() - Scalar::q_power(n - k * (a + 1));
        } else {
            for (long n = 0; n < -k; ++n) f /= Scalar::one() - Scalar::q_power(n - k * a);
        }
        out *= f.pow(nvars - a);  // nvars - a pairs have gap a
    }
    return out;
}

// G~_lambda(t) = prod_{i<j} prod_{m=0}^{c_ij-1} (1 - t q^m)/(1 - t^2 q^m) as a
// num/den pair of polynomials in t (the finite rational part of the
// normalization once t^{sum lambda rho} and the lambda-independent infinite
// factor are split off)
void g_ratio_tpoly(const Partition& lambda, int nvars, TPoly& num, TPoly& den) {
    Partition lam = lambda.padded(nvars);
    num = TPoly(Scalar::one());
    den = TPoly(Scalar::one());
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            long a = j - i;
            long c = lam.parts[i] - lam.parts[j];
            for (long m = 0; m < c; ++m) {
                num *= TPoly(Scalar::one()) + TPoly::monomial(a, -Scalar::q_power(m));
                den *= TPoly(Scalar::one()) + TPoly::monomial(a + 1, -Scalar::q_power(m));
            }
        }
}

// c_lambda(q,t) = prod_{cells} (1 - q^{arm} t^{leg+1}): the integral-form
// normalizer; c_lambda * (Gram-Schmidt coordinates) is polynomial in (q,t)
TPoly integral_normalizer(const Partition& lambda) {
    TPoly out{Scalar::one()};
    const auto& parts = lambda.trimmed().parts;
    long rows = static_cast<long>(parts.size());
    for (long r = 0; r < rows; ++r)
        for (long col = 1; col <= parts[r]; ++col) {
            long arm = parts[r] - col;
            long leg = 0;
            for (long r2 = r + 1; r2 < rows; ++r2)
                if (parts[r2] >= col) ++leg;
            out *= TPoly(Scalar::one()) + TPoly::monomial(leg + 1, -Scalar::q_power(arm));
        }
    return out;
}

// Coordinates of every P at one weight as polynomials in t: built by sampling
// Gram-Schmidt at integer t values and Lagrange interpolation, with extra
// nodes checked to confirm the degree bound.
struct WeightInterp {
    std::vector<Partition> basis;
    std::vector<TPoly> normalizer;            // c_{basis[i]}
    std::vector<std::vector<TPoly>> coords;   // coords[i][j] = c_i * u_{ij}, polynomial in t
};

WeightGS<Scalar> sample_gs(long d, const Rat& tval) {
    return gram_schmidt_weight<Scalar>(d, [&](const Partition& rho) {
        Scalar out = Scalar::one();
        long repeat = 1;
        const auto& parts = rho.trimmed().parts;
        for (size_t i = 0; i < parts.size(); ++i) {
            repeat = (i > 0 && parts[i] == parts[i - 1]) ? repeat + 1 : 1;
            out *= Scalar(Rat(parts[i]) * Rat(repeat));
            out *= (Scalar::one() - Scalar::q_power(parts[i])) /
                   Scalar(Rat(1) - rat_pow(tval, parts[i]));
        }
        return out;
    });
}

const WeightInterp& weight_interp(long d) {
    static std::map<long, WeightInterp> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    WeightInterp wi;
    wi.basis = partitions_of(d, d > 0 ? d : 1);
    size_t n = wi.basis.size();
    wi.normalizer.reserve(n);
    long dmax = 0;
    for (const auto& lam : wi.basis) {
        wi.normalizer.push_back(integral_normalizer(lam));
        dmax = std::max(dmax, wi.normalizer.back().degree());
    }

    long degree = dmax + 4;
    for (int attempt = 0;; ++attempt, degree *= 2) {
        long nnodes = degree + 1, nverify = 2;
        std::vector<Rat> nodes;
        std::vector<WeightGS<Scalar>> samples;
        for (long m = 0; m < nnodes + nverify; ++m) {
            nodes.emplace_back(m + 2);
            samples.push_back(sample_gs(d, nodes.back()));
        }
        // Lagrange node polynomials over the first nnodes nodes
        std::vector<TPoly> lag(nnodes);
        for (long m = 0; m < nnodes; ++m) {
            TPoly p{Scalar::one()};
            Rat denom(1);
            for (long m2 = 0; m2 < nnodes; ++m2) {
                if (m2 == m) continue;
                p *= TPoly(Scalar(-nodes[m2])) + TPoly::monomial(1, Scalar::one());
                denom *= nodes[m] - nodes[m2];
            }
            lag[m] = p.scaled(Scalar(Rat(1) / denom));
        }
        wi.coords.assign(n, {});
        bool ok = true;
        for (size_t i = 0; ok && i < n; ++i) {
            wi.coords[i].assign(i + 1, TPoly());
            for (size_t j = 0; ok && j <= i; ++j) {
                std::vector<Scalar> vals(nnodes + nverify);
                bool nonzero = false;
                for (long m = 0; m < nnodes + nverify; ++m) {
                    const Scalar& u = samples[m].coords[i][j];
                    if (u.is_zero()) continue;
                    vals[m] = u * wi.normalizer[i].eval(Scalar(nodes[m]));
                    if (!vals[m].is_polynomial())
                        throw error("integral-form coordinate failed to clear denominators");
                    nonzero = true;
                }
                if (!nonzero) continue;
                TPoly v;
                for (long m = 0; m < nnodes; ++m)
                    if (!vals[m].is_zero()) v += lag[m].scaled(vals[m]);
                for (long m = nnodes; m < nnodes + nverify; ++m)
                    if (!(v.eval(Scalar(nodes[m])) == vals[m])) { ok = false; break; }
                wi.coords[i][j] = std::move(v);
            }
        }
        if (ok) break;
        if (attempt == 2) throw error("t-degree bound for coordinate interpolation exceeded");
    }
    return cache.emplace(d, std::move(wi)).first->second;
}

} // namespace

LaurentPoly phi_polynomial_qk(const Partition& lambda, int nvars, long k) {
    if (k == 0) throw pole_error("t = 1 (k = 0) is excluded");
    if (lambda.size() > nvars) throw invalid_argument("partition has more parts than variables");
    // translation: Phi_{lambda + c*1} = (prod x)^c Phi_lambda (the rho-twist
    // is translation invariant since sum rho_i = 0)
    Partition full = lambda.padded(nvars);
    long cshift = full.parts.back();
    if (cshift != 0) {
        LaurentPoly base = phi_polynomial_qk(Partition(full.shifted(cshift).parts), nvars, k);
        LaurentPoly::Exp mono(nvars, static_cast<int>(cshift));
        return base.mul_monomial(mono, Scalar::one());
    }
    Partition lam = lambda.trimmed();
    if (weight_regular_at_qk(lam.weight(), k)) {
        Scalar factor = phi_factor_value(lam, nvars, k);
        auto& table = MacdonaldTable::shared(SpecPoint::t_qk(k));
        return table.polynomial(lam, nvars).scaled(factor);
    }
    // coefficientwise exact limit t -> q^{-k} of N0 G~ c^{-1} (c u) P-coordinates
    const WeightInterp& wi = weight_interp(lam.weight());
    int idx = -1;
    for (size_t i = 0; i < wi.basis.size(); ++i)
        if (wi.basis[i] == lam) { idx = static_cast<int>(i); break; }
    if (idx < 0) throw error("partition missing from its weight basis");

    TPoly gnum, gden;
    g_ratio_tpoly(lam, nvars, gnum, gden);
    Scalar t0 = Scalar::s_power(-2 * k);
    Scalar pref = n0_factor(nvars, k) * Scalar::s_power(rho_twist_s_exp(lam, nvars, k));
    TPoly den = gden * wi.normalizer[idx];

    LaurentPoly out(nvars);
    for (size_t j = 0; j < wi.coords[idx].size(); ++j) {
        const TPoly& v = wi.coords[idx][j];
        if (v.is_zero()) continue;
        if (wi.basis[j].size() > nvars) continue;
        Scalar c = pref * rational_limit(gnum * v, den, t0);
        if (c.is_zero()) continue;
        out += monomial_symmetric(wi.basis[j], nvars).scaled(c);
    }
    return out;
}

PhiValue phi_at_duality_point(const Partition& lambda, const Partition& mu, long k, int nvars) {
    if (k == 0) throw pole_error("t = 1 (k = 0) is excluded");
    if (lambda.size() > nvars || mu.size() > nvars)
        throw invalid_argument("partition has more parts than variables");
    // translation reduction: Phi_{lambda+c*1}(q^{mu-k rho}) =
    // q^{c |mu|} Phi_lambda(q^{mu-k rho}) since prod_i q^{mu_i - k rho_i} = q^{|mu|}
    {
        Partition full = lambda.padded(nvars);
        long cshift = full.parts.back();
        if (cshift != 0) {
            PhiValue base = phi_at_duality_point(Partition(full.shifted(cshift).parts), mu, k, nvars);
            base.value *= Scalar::q_power(cshift * mu.weight());
            return base;
        }
    }
    Partition lam = lambda.trimmed();
    if (weight_regular_at_qk(lam.weight(), k)) {
        // direct: Gram-Schmidt at t = q^{-k} computes the generic-t limit here,
        // and a vanishing telescoped factor simply makes Phi zero
        Scalar factor = phi_factor_value(lam, nvars, k);
        auto& table = MacdonaldTable::shared(SpecPoint::t_qk(k));
        LaurentPoly P = table.polynomial(lam, nvars);
        return {factor * P.evaluate(duality_point(mu, nvars, k)), false};
    }
    // value-level limit: sum the coordinate polynomials against the monomial
    // values first, then clear (t - q^{-k}) factors once
    const WeightInterp& wi = weight_interp(lam.weight());
    int idx = -1;
    for (size_t i = 0; i < wi.basis.size(); ++i)
        if (wi.basis[i] == lam) { idx = static_cast<int>(i); break; }
    if (idx < 0) throw error("partition missing from its weight basis");

    auto point = duality_point(mu, nvars, k);
    TPoly num;
    for (size_t j = 0; j < wi.coords[idx].size(); ++j) {
        const TPoly& v = wi.coords[idx][j];
        if (v.is_zero()) continue;
        if (wi.basis[j].size() > nvars) continue;
        Scalar mval = monomial_symmetric(wi.basis[j], nvars).evaluate(point);
        if (!mval.is_zero()) num += v.scaled(mval);
    }
    TPoly gnum, gden;
    g_ratio_tpoly(lam, nvars, gnum, gden);
    Scalar t0 = Scalar::s_power(-2 * k);
    Scalar pref = n0_factor(nvars, k) * Scalar::s_power(rho_twist_s_exp(lam, nvars, k));
    Scalar value = pref * rational_limit(gnum * num, gden * wi.normalizer[idx], t0);
    return {value, true};
}

SelfDualityResult self_duality_check(const Partition& lambda, const Partition& mu, long k, int nvars) {
    PhiValue lhs = phi_at_duality_point(lambda, mu, k, nvars);
    PhiValue rhs = phi_at_duality_point(mu, lambda, k, nvars);
    return {lhs.value == rhs.value, lhs.via_limit || rhs.via_limit, lhs.value, rhs.value};
}

} // namespace qw
