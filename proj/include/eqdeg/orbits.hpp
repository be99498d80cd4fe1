#pragma once

#include <cstdint>
#include <vector>

#include "eqdeg/ints.hpp"

namespace eqdeg::orbits {

// Non-increasing positive block sizes summing to n. A point of the simplex
// boundary whose coordinates split into blocks of equal values of these
// sizes has an orbit of size multinomial(n, blocks) under coordinate
// permutation; orderings of the blocks do not change that, so partitions
// are kept as sorted multisets.
using PartitionType = std::vector<std::int64_t>;

struct OrbitInfo {
    PartitionType partition;
    Int orbit_size;
    Int stabilizer_order;  // product of block factorials; orbit * stabilizer = n!
    bool operator==(const OrbitInfo&) const = default;
};

// Every partition of n exactly once, largest-first within a partition,
// ordered (n), (n-1,1), ..., (1,...,1).
std::vector<PartitionType> partitions(std::int64_t n);

Int orbit_size(std::int64_t n, const PartitionType& partition);

OrbitInfo orbit_info(std::int64_t n, const PartitionType& partition);

struct OrbitResidueRow {
    PartitionType partition;
    std::int64_t residue;
    bool operator==(const OrbitResidueRow&) const = default;
};

// One row per partition with at least two blocks (single-block points are
// the fixed center, not a proper orbit), carrying orbit_size mod p.
std::vector<OrbitResidueRow> orbit_divisibility_table(std::int64_t n, std::int64_t p);

// The partitions (>= 2 blocks) whose orbit size is not divisible by p.
std::vector<PartitionType> exceptional_orbits(std::int64_t n, std::int64_t p);

}  // namespace eqdeg::orbits
