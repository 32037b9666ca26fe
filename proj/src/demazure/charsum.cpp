#include "demazure/charsum.hpp"

#include <algorithm>

#include "corealg/partition.hpp"

namespace qw {

CharSum char_monomial(const AffineWeight& mu, long long c) {
    CharSum out;
    if (c != 0) out.emplace(mu, c);
    return out;
}

CharSum char_add(const CharSum& a, const CharSum& b) {
    CharSum out = a;
    for (const auto& [mu, c] : b) {
        auto it = out.find(mu);
        if (it == out.end()) {
            out.emplace(mu, c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

CharSum char_mul_monomial(const CharSum& a, const AffineWeight& mu) {
    CharSum out;
    for (const auto& [nu, c] : a) out.emplace(nu + mu, c);
    return out;
}

bool char_equal(const CharSum& a, const CharSum& b) { return a == b; }

CharSum demazure_op(int i, const CharSum& c) {
    CharSum out;
    auto acc = [&out](const AffineWeight& mu, long long v) {
        if (v == 0) return;
        auto it = out.find(mu);
        if (it == out.end()) {
            out.emplace(mu, v);
        } else {
            it->second += v;
            if (it->second == 0) out.erase(it);
        }
    };
    for (const auto& [mu, v] : c) {
        AffineWeight alpha = simple_root(i, mu.rank());
        long m = bilinear_form(mu, alpha);
        if (m >= 0) {
            for (long j = 0; j <= m; ++j) acc(mu - alpha.scaled(j), v);
        } else if (m <= -2) {
            for (long j = 1; j <= -m - 1; ++j) acc(mu + alpha.scaled(j), -v);
        }
        // m == -1: the numerator cancels, nothing contributed
    }
    return out;
}

CharSum demazure_character(const AffineWeight& omega, const std::vector<int>& word) {
    CharSum ch = char_monomial(omega);
    for (auto it = word.rbegin(); it != word.rend(); ++it) ch = demazure_op(*it, ch);
    return ch;
}

LaurentPoly pi_homomorphism(const CharSum& c, int nvars) {
    LaurentPoly out(nvars);
    for (const auto& [mu, v] : c) {
        if (mu.rank() != nvars) throw invalid_argument("weight rank and nvars disagree");
        LaurentPoly::Exp e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>(mu.fin[i]);
        out.add_term(e, Scalar(QLaurent::q_power(mu.deg, Rat(static_cast<long>(v)))));
    }
    return out;
}

CorSanData demazure_whittaker_data(const std::vector<long>& p) {
    if (!is_weakly_decreasing(p)) throw invalid_argument("needs a dominant lattice point");
    int n = static_cast<int>(p.size());
    std::vector<long> lamdot(p.rbegin(), p.rend());  // antidominant member of the orbit
    OrbitData orbit = orbit_representative(lamdot);

    AffineWeight start = fundamental_weight(0, n);  // omega_0 = e_-
    for (int j = 0; j < n; ++j) start.fin[j] = orbit.representative[j];
    CharSum ch = demazure_character(start, orbit.word);

    long norm_ld = 0, norm_rep = 0;
    for (long x : lamdot) norm_ld += x * x;
    for (long x : orbit.representative) norm_rep += x * x;

    CorSanData out;
    out.pi_char = pi_homomorphism(ch, n);
    out.c2 = norm_ld - norm_rep;
    out.orbit = std::move(orbit);
    return out;
}

LaurentPoly demazure_whittaker_value(const std::vector<long>& p) {
    CorSanData data = demazure_whittaker_data(p);
    if (data.c2 % 2 != 0) throw error("orbit norm difference is odd");
    return data.pi_char.scaled(Scalar::q_power(data.c2 / 2));
}

} // namespace qw
