#include "corealg/gz.hpp"

namespace qw {

long GZPattern::row_sum(long k) const {
    if (k < 0) return 0;
    long s = 0;
    for (long x : rows[k]) s += x;
    return s;
}

bool GZPattern::interlaces() const {
    for (size_t k = 0; k + 1 < rows.size(); ++k) {
        const auto& lo = rows[k];
        const auto& up = rows[k + 1];
        for (size_t i = 0; i < lo.size(); ++i)
            if (!(up[i] >= lo[i] && lo[i] >= up[i + 1])) return false;
    }
    return true;
}

namespace {

void fill_rows(GZPattern& pat, long k, const std::function<void(const GZPattern&)>& visit) {
    if (k < 0) {
        visit(pat);
        return;
    }
    const auto& upper = pat.rows[k + 1];
    auto& row = pat.rows[k];
    std::function<void(long)> fill_entry = [&](long i) {
        if (i > k) {
            fill_rows(pat, k - 1, visit);
            return;
        }
        // interlacing bounds within the upper row; weak decrease of the row
        // itself follows automatically
        for (long v = upper[i + 1]; v <= upper[i]; ++v) {
            row[i] = v;
            fill_entry(i + 1);
        }
    };
    fill_entry(0);
}

} // namespace

void enumerate_gz(const Partition& top, const std::function<void(const GZPattern&)>& visit) {
    if (!is_weakly_decreasing(top.parts))
        throw invalid_argument("GZ top row must be weakly decreasing");
    long n = top.size();
    GZPattern pat;
    pat.rows.resize(n);
    for (long k = 0; k < n; ++k) pat.rows[k].resize(k + 1);
    pat.rows[n - 1] = top.parts;
    if (n == 0) return;
    fill_rows(pat, n - 2, visit);
}

long count_gz(const Partition& top) {
    long n = 0;
    enumerate_gz(top, [&](const GZPattern&) { ++n; });
    return n;
}

} // namespace qw
