#include "eqdeg/orbits.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqdeg/numtheory.hpp"

namespace eqdeg::orbits {

namespace {

void gen_partitions(std::int64_t remaining, std::int64_t max_part, PartitionType& current,
                    std::vector<PartitionType>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::int64_t part = std::min(max_part, remaining); part >= 1; --part) {
        current.push_back(part);
        gen_partitions(remaining - part, part, current, out);
        current.pop_back();
    }
}

void check_partition(std::int64_t n, const PartitionType& partition) {
    if (partition.empty()) throw std::domain_error("partition: empty");
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] <= 0) throw std::domain_error("partition: blocks must be positive");
        if (i > 0 && partition[i] > partition[i - 1])
            throw std::domain_error("partition: blocks must be non-increasing");
        sum += partition[i];
    }
    if (sum != n) throw std::domain_error("partition: blocks must sum to n");
}

}  // namespace

std::vector<PartitionType> partitions(std::int64_t n) {
    if (n < 1) throw std::domain_error("partitions: n must be >= 1");
    std::vector<PartitionType> out;
    PartitionType current;
    gen_partitions(n, n, current, out);
    return out;
}

Int orbit_size(std::int64_t n, const PartitionType& partition) {
    check_partition(n, partition);
    return numtheory::multinomial(n, partition);
}

OrbitInfo orbit_info(std::int64_t n, const PartitionType& partition) {
    Int size = orbit_size(n, partition);
    Int stab = 1;
    for (std::int64_t a : partition) {
        Int f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a));
        stab *= f;
    }
    return {partition, size, stab};
}

std::vector<OrbitResidueRow> orbit_divisibility_table(std::int64_t n, std::int64_t p) {
    if (n < 2) throw std::domain_error("orbit_divisibility_table: n must be >= 2");
    if (!numtheory::is_prime(p)) throw std::domain_error("orbit_divisibility_table: p must be prime");
    std::vector<OrbitResidueRow> rows;
    for (const PartitionType& partition : partitions(n)) {
        if (partition.size() < 2) continue;
        rows.push_back({partition, pos_mod(orbit_size(n, partition), p)});
    }
    return rows;
}

std::vector<PartitionType> exceptional_orbits(std::int64_t n, std::int64_t p) {
    std::vector<PartitionType> out;
    for (const OrbitResidueRow& row : orbit_divisibility_table(n, p))
        if (row.residue != 0) out.push_back(row.partition);
    return out;
}

}  // namespace eqdeg::orbits
