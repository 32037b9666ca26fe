#pragma once

#include <functional>

#include "corealg/partition.hpp"

namespace qw {

// Triangular integer array p[k][i], 0 <= i <= k < n (row k has k+1 entries),
// rows interlacing upward: p[k+1][i] >= p[k][i] >= p[k+1][i+1].
struct GZPattern {
    std::vector<std::vector<long>> rows;  // rows[k] has k+1 entries; rows.back() is the top

    long top_size() const { return static_cast<long>(rows.size()); }
    long row_sum(long k) const;  // 0 for k < 0
    bool interlaces() const;
};

// Visits every pattern with the given top row exactly once, in a fixed
// deterministic order (per row, entries scanned from their lower interlacing
// bound upward, deepest row varying fastest).
void enumerate_gz(const Partition& top, const std::function<void(const GZPattern&)>& visit);

long count_gz(const Partition& top);

} // namespace qw
