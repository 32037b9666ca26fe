#pragma once

#include <vector>

#include "corealg/errors.hpp"

namespace qw {

// Weakly decreasing integer vector; negative entries allowed (generalized
// partition). Stored with its explicit length, trailing zeros significant
// only as padding.
struct Partition {
    std::vector<long> parts;

    Partition() = default;
    explicit Partition(std::vector<long> p);  // validates weak decrease
    Partition(std::initializer_list<long> p) : Partition(std::vector<long>(p)) {}

    long size() const { return static_cast<long>(parts.size()); }
    long weight() const;
    long part(long i) const { return i < size() ? parts[i] : 0; }  // 0-based, padded
    bool nonnegative() const;

    Partition padded(long n) const;   // extend with zeros to length n
    Partition trimmed() const;        // drop trailing zeros
    // subtract k from every part (generalized shift)
    Partition shifted(long k) const;

    bool operator==(const Partition& o) const { return trimmed().parts == o.trimmed().parts; }
    bool operator<(const Partition& o) const { return trimmed().parts < o.trimmed().parts; }
};

bool is_weakly_decreasing(const std::vector<long>& v);

// dominance order on equal-weight partitions: partial sums of a never below those of b
bool dominates(const Partition& a, const Partition& b);

// all partitions of d with at most maxlen parts, ascending lexicographic
// (a linear extension of dominance)
std::vector<Partition> partitions_of(long d, long maxlen);

// multiplicity vector {m_n} helper
long part_multiplicity(const Partition& p, long value);

} // namespace qw
