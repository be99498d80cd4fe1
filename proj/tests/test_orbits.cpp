#include <doctest.h>

#include <set>

#include "eqdeg/numtheory.hpp"
#include "eqdeg/orbits.hpp"

using namespace eqdeg;
using namespace eqdeg::orbits;

namespace {

Int factorial(std::int64_t n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

// Independent partition counter (Euler-style DP), no enumeration.
Int partition_count(std::int64_t n) {
    std::vector<Int> p(static_cast<std::size_t>(n + 1), Int(0));
    p[0] = 1;
    for (std::int64_t part = 1; part <= n; ++part)
        for (std::int64_t total = part; total <= n; ++total)
            p[static_cast<std::size_t>(total)] += p[static_cast<std::size_t>(total - part)];
    return p[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("partitions of small n in the documented order") {
    CHECK(partitions(1) == std::vector<PartitionType>{{1}});
    CHECK(partitions(4) ==
          std::vector<PartitionType>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions(6).size() == 11);
    CHECK_THROWS_AS(partitions(0), std::domain_error);
}

TEST_CASE("partition enumeration is exhaustive and duplicate-free up to 25") {
    for (std::int64_t n = 1; n <= 25; ++n) {
        auto parts = partitions(n);
        CHECK(Int(static_cast<long>(parts.size())) == partition_count(n));
        std::set<PartitionType> unique(parts.begin(), parts.end());
        CHECK(unique.size() == parts.size());
        for (const auto& partition : parts) {
            std::int64_t sum = 0;
            for (std::size_t i = 0; i < partition.size(); ++i) {
                CHECK(partition[i] >= 1);
                if (i > 0) CHECK(partition[i] <= partition[i - 1]);
                sum += partition[i];
            }
            CHECK(sum == n);
        }
    }
}

TEST_CASE("orbit sizes on the worked examples") {
    CHECK(orbit_size(6, {3, 3}) == 20);
    CHECK(orbit_size(7, {7}) == 1);
    CHECK(orbit_size(6, {2, 2, 2}) == 90);
    CHECK_THROWS_AS(orbit_size(6, {3, 2}), std::domain_error);
    CHECK_THROWS_AS(orbit_size(6, {2, 3, 1}), std::domain_error);
}

TEST_CASE("orbit size times stabilizer order is n! for all partitions up to n = 25") {
    for (std::int64_t n = 1; n <= 25; ++n) {
        Int nfac = factorial(n);
        for (const auto& partition : partitions(n)) {
            OrbitInfo info = orbit_info(n, partition);
            REQUIRE(info.orbit_size * info.stabilizer_order == nfac);
        }
    }
}

TEST_CASE("every proper multinomial is divisible by its leading binomial up to n = 20") {
    for (std::int64_t n = 2; n <= 20; ++n)
        for (const auto& partition : partitions(n)) {
            if (partition.size() < 2) continue;
            Int size = orbit_size(n, partition);
            Int lead = numtheory::binomial(n, partition[0]);
            REQUIRE(mpz_divisible_p(size.get_mpz_t(), lead.get_mpz_t()) != 0);
        }
}

TEST_CASE("divisibility tables on the worked examples") {
    SUBCASE("n = 9, p = 3: every proper orbit divisible by 3") {
        auto table = orbit_divisibility_table(9, 3);
        CHECK(table.size() == 29);
        for (const auto& row : table) CHECK(row.residue == 0);
    }
    SUBCASE("n = 6, p = 3: only (3,3) survives") {
        for (const auto& row : orbit_divisibility_table(6, 3)) {
            if (row.partition == PartitionType{3, 3})
                CHECK(row.residue == 2);
            else
                CHECK(row.residue == 0);
        }
    }
    SUBCASE("n = 4, p = 2: nothing survives") {
        auto table = orbit_divisibility_table(4, 2);
        CHECK(table.size() == 4);
        for (const auto& row : table) CHECK(row.residue == 0);
    }
    CHECK_THROWS_AS(orbit_divisibility_table(6, 4), std::domain_error);
}

TEST_CASE("exceptional orbits on the worked examples") {
    CHECK(exceptional_orbits(6, 3) == std::vector<PartitionType>{{3, 3}});
    CHECK(pos_mod(orbit_size(6, {3, 3}), 3) == 2);
    CHECK(exceptional_orbits(9, 3).empty());
    CHECK(exceptional_orbits(10, 5) == std::vector<PartitionType>{{5, 5}});
    CHECK(orbit_size(10, {5, 5}) == 252);
    CHECK(pos_mod(orbit_size(10, {5, 5}), 5) == 2);
}

TEST_CASE("prime powers up to 32 have no exceptional orbits") {
    for (std::int64_t n = 2; n <= 32; ++n) {
        auto f = numtheory::factorize(n);
        if (f.size() != 1) continue;
        CHECK(exceptional_orbits(n, f[0].prime).empty());
    }
}

TEST_CASE("twice an odd prime power up to 32 has exactly the half-half orbit") {
    for (std::int64_t n = 2; n <= 32; ++n) {
        if (numtheory::classify(n).kind != numtheory::NKind::TwicePrimePower) continue;
        std::int64_t p = numtheory::classify(n).p;
        auto exceptional = exceptional_orbits(n, p);
        REQUIRE(exceptional == std::vector<PartitionType>{{n / 2, n / 2}});
        CHECK(pos_mod(orbit_size(n, exceptional[0]), p) == 2);
    }
}
