#include "corealg/partition.hpp"

#include <algorithm>
#include <functional>

namespace qw {

bool is_weakly_decreasing(const std::vector<long>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
    if (!is_weakly_decreasing(parts))
        throw invalid_argument("partition entries must be weakly decreasing");
}

long Partition::weight() const {
    long w = 0;
    for (long x : parts) w += x;
    return w;
}

bool Partition::nonnegative() const {
    return parts.empty() || parts.back() >= 0;
}

Partition Partition::padded(long n) const {
    if (size() > n) {
        // only trailing zeros may be dropped
        for (long i = n; i < size(); ++i)
            if (parts[i] != 0) throw invalid_argument("partition longer than requested padding");
    }
    Partition out = *this;
    out.parts.resize(n, 0);
    return out;
}

Partition Partition::trimmed() const {
    Partition out = *this;
    while (!out.parts.empty() && out.parts.back() == 0) out.parts.pop_back();
    return out;
}

Partition Partition::shifted(long k) const {
    Partition out = *this;
    for (long& x : out.parts) x -= k;
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return false;
    long sa = 0, sb = 0;
    long n = std::max(a.size(), b.size());
    for (long i = 0; i < n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(long d, long maxlen) {
    std::vector<Partition> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rem, long maxpart) {
        if (rem == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        if (static_cast<long>(cur.size()) >= maxlen) return;
        for (long first = std::min(rem, maxpart); first >= 1; --first) {
            cur.push_back(first);
            rec(rem - first, first);
            cur.pop_back();
        }
    };
    rec(d, d);
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return a.parts < b.parts; });
    return out;
}

long part_multiplicity(const Partition& p, long value) {
    long m = 0;
    for (long x : p.parts)
        if (x == value) ++m;
    return m;
}

} // namespace qw
