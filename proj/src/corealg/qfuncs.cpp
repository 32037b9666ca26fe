#include "corealg/qfuncs.hpp"

#include <mutex>
#include <vector>

namespace qw {

namespace {
std::vector<QLaurent>& factorial_cache() {
    static std::vector<QLaurent> cache{QLaurent::one()};
    return cache;
}
std::mutex cache_mutex;
} // namespace

QLaurent q_factorial(long n) {
    if (n < 0) throw invalid_argument("q_factorial of a negative integer");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = factorial_cache();
    while (static_cast<long>(cache.size()) <= n) {
        long j = static_cast<long>(cache.size());
        QLaurent factor = QLaurent::one() - QLaurent::q_power(j);
        cache.push_back(cache.back() * factor);
    }
    return cache[n];
}

QLaurent q_binomial(long n, long m) {
    if (m < 0 || m > n) return QLaurent();
    QLaurent den = q_factorial(m) * q_factorial(n - m);
    return q_factorial(n).divide_exact(den);
}

QLaurent q_pochhammer_s(const Rat& coeff, long s_exp, long step, long n) {
    QLaurent out = QLaurent::one();
    for (long j = 0; j < n; ++j)
        out = out * (QLaurent::one() - QLaurent::s_power(s_exp + 2 * step * j, coeff));
    return out;
}

} // namespace qw
