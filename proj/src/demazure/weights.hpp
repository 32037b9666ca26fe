#pragma once

#include <map>
#include <vector>

#include "corealg/laurent_poly.hpp"

namespace qw {

// Weight of affine gl_{n} realized in the basis {e_1..e_n, e_+, e_-}:
// fin holds the e_i coefficients, level the e_- coefficient, deg the e_+
// coefficient. The bilinear form pairs e_i with e_i and e_+ with e_-.
struct AffineWeight {
    std::vector<long> fin;
    long level = 0;
    long deg = 0;

    int rank() const { return static_cast<int>(fin.size()); }  // n

    bool operator<(const AffineWeight& o) const {
        if (fin != o.fin) return fin < o.fin;
        if (level != o.level) return level < o.level;
        return deg < o.deg;
    }
    bool operator==(const AffineWeight& o) const {
        return fin == o.fin && level == o.level && deg == o.deg;
    }
    AffineWeight operator-(const AffineWeight& o) const;
    AffineWeight operator+(const AffineWeight& o) const;
    AffineWeight scaled(long c) const;
};

long bilinear_form(const AffineWeight& a, const AffineWeight& b);

// alpha_i = e_i - e_{i+1} for 1 <= i <= n-1; alpha_0 = e_+ - e_1 + e_n
AffineWeight simple_root(int i, int n);
// omega_i = e_1 + .. + e_i + e_- for 1 <= i <= n; omega_0 = e_-
AffineWeight fundamental_weight(int i, int n);
// delta = e_+
AffineWeight imaginary_root(int n);

// s_i(mu) = mu - (mu, alpha_i^v) alpha_i; all alpha_i have square length 2
AffineWeight weyl_reflect(int i, const AffineWeight& mu);

// the projected action on level-one finite parts
std::vector<long> weyl_reflect_projected(int i, const std::vector<long>& lam);

// Reduced word for the element carrying the orbit representative
// k*1 + omega_i (level one) to the weight projecting to the input vector.
// Indices apply right to left: target = s_{w[0]} ... s_{w[last]} (rep).
struct OrbitData {
    long k = 0;
    int i = 0;
    std::vector<int> word;
    std::vector<long> representative;
};
OrbitData orbit_representative(const std::vector<long>& lam);

} // namespace qw
