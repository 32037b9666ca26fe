#include "demazure/weights.hpp"

namespace qw {

AffineWeight AffineWeight::operator-(const AffineWeight& o) const {
    AffineWeight out = *this;
    for (size_t i = 0; i < fin.size(); ++i) out.fin[i] -= o.fin[i];
    out.level -= o.level;
    out.deg -= o.deg;
    return out;
}

AffineWeight AffineWeight::operator+(const AffineWeight& o) const {
    AffineWeight out = *this;
    for (size_t i = 0; i < fin.size(); ++i) out.fin[i] += o.fin[i];
    out.level += o.level;
    out.deg += o.deg;
    return out;
}

AffineWeight AffineWeight::scaled(long c) const {
    AffineWeight out = *this;
    for (auto& x : out.fin) x *= c;
    out.level *= c;
    out.deg *= c;
    return out;
}

long bilinear_form(const AffineWeight& a, const AffineWeight& b) {
    if (a.fin.size() != b.fin.size()) throw invalid_argument("weight ranks differ");
    long out = 0;
    for (size_t i = 0; i < a.fin.size(); ++i) out += a.fin[i] * b.fin[i];
    out += a.level * b.deg + a.deg * b.level;
    return out;
}

AffineWeight simple_root(int i, int n) {
    if (i < 0 || i >= n) throw invalid_argument("simple root index out of range");
    AffineWeight a;
    a.fin.assign(n, 0);
    if (i == 0) {
        a.fin[0] = -1;
        a.fin[n - 1] = 1;
        a.deg = 1;
    } else {
        a.fin[i - 1] = 1;
        a.fin[i] = -1;
    }
    return a;
}

AffineWeight fundamental_weight(int i, int n) {
    if (i < 0 || i > n) throw invalid_argument("fundamental weight index out of range");
    AffineWeight w;
    w.fin.assign(n, 0);
    for (int j = 0; j < i; ++j) w.fin[j] = 1;
    w.level = 1;
    return w;
}

AffineWeight imaginary_root(int n) {
    AffineWeight d;
    d.fin.assign(n, 0);
    d.deg = 1;
    return d;
}

AffineWeight weyl_reflect(int i, const AffineWeight& mu) {
    AffineWeight alpha = simple_root(i, mu.rank());
    long m = bilinear_form(mu, alpha);  // (alpha, alpha) = 2, alpha^v = alpha
    return mu - alpha.scaled(m);
}

std::vector<long> weyl_reflect_projected(int i, const std::vector<long>& lam) {
    std::vector<long> out = lam;
    long n = static_cast<long>(lam.size());
    if (i == 0) {
        out[0] = lam[n - 1] + 1;
        out[n - 1] = lam[0] - 1;
    } else {
        std::swap(out[i - 1], out[i]);
    }
    return out;
}

OrbitData orbit_representative(const std::vector<long>& lam) {
    long n = static_cast<long>(lam.size());
    OrbitData out;
    std::vector<long> cur = lam;
    // ascend: whenever (mu, alpha_i^v) < 0 apply s_i (smallest such i), until
    // the weight is the dominant representative with lambda_1 <= lambda_n + 1
    for (long guard = 0;; ++guard) {
        if (guard > 100000) throw error("orbit ascent failed to terminate");
        int neg = -1;
        long m0 = 1 - cur[0] + cur[n - 1];
        if (m0 < 0) neg = 0;
        for (long i = 1; neg < 0 && i < n; ++i)
            if (cur[i - 1] - cur[i] < 0) neg = static_cast<int>(i);
        if (neg < 0) break;
        cur = weyl_reflect_projected(neg, cur);
        out.word.push_back(neg);
    }
    out.representative = cur;
    out.k = cur[n - 1];
    out.i = 0;
    for (long j = 0; j < n; ++j)
        if (cur[j] == out.k + 1) ++out.i;
    return out;
}

} // namespace qw
