#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqdeg/ints.hpp"

namespace eqdeg::oracle {

// Brute-force cross-checks that re-derive divisibility and existence facts
// from first principles. They share only the big-integer layer with the
// modules they check: binomials come from local Pascal rows, primality and
// prime-power detection from local trial division.

struct CheckReport {
    std::string name;
    std::string range;
    std::vector<std::string> counterexamples;
    double elapsed_seconds = 0.0;
    bool passed() const { return counterexamples.empty(); }
};

// Direct gcd of each Pascal row vs the prime-power prediction, and vs the
// formula implementation.
CheckReport brute_gcd_check(std::int64_t n_max);

// lucas_residue and padic_valuation_binomial vs direct big-integer
// arithmetic for all n <= n_max, 0 <= k <= n and the given primes.
CheckReport brute_lucas_check(std::int64_t n_max, const std::vector<std::int64_t>& primes);

// Searches for a d vector with |d_k| <= bound satisfying the sum identity
// and both congruence conditions, by dynamic programming over reachable
// partial sums -- no use of the constructive proof. n <= 12.
std::optional<std::vector<std::int64_t>> exhaustive_zero_search(std::int64_t n,
                                                                std::int64_t bound);

// Searches for entries with d_k in the admissible local-degree sets,
// |d_k| <= bound and 1 - sum d_k C(n,k) = d. Returns nullopt immediately
// when d violates the necessary constraint. n <= 12.
std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> exhaustive_degree_search(
    std::int64_t n, const Int& d, std::int64_t bound);

}  // namespace eqdeg::oracle
