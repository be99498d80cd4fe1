#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "eqdeg/ints.hpp"

namespace eqdeg::degrees {

// Residue constraint a degree must satisfy; modulus 0 with empty residue
// set means unconstrained.
struct DegreeConstraint {
    std::int64_t modulus = 0;
    std::set<std::int64_t> residues;

    bool unconstrained() const { return modulus == 0; }
    bool satisfies(const Int& d) const;
    std::string describe() const;
    bool operator==(const DegreeConstraint&) const = default;
};

struct Coset {
    std::int64_t modulus;
    std::int64_t residue;
    bool operator==(const Coset&) const = default;
};

// A set of degrees known to be attainable: everything, a union of cosets
// and explicit members, or both. `exact` distinguishes a full
// classification from a lower bound; lower-bound sets never justify
// exclusion.
struct KnownDegreeSet {
    bool all = false;
    std::vector<Coset> cosets;
    std::vector<Int> members;
    bool exact = false;

    bool contains(const Int& d) const;
    // Members with |v| <= bound in the order 0, -1, 1, -2, 2, ...
    std::vector<Int> values_within(std::int64_t bound) const;
    std::string describe() const;
};

KnownDegreeSet all_degrees();

// gcd of C(n,1), ..., C(n,n-1).
Int gcd_binomials(std::int64_t n);

// PrimePower p^k -> d = 1 (mod p); TwicePrimePower p^k -> d = +-1 (mod p);
// otherwise unconstrained.
DegreeConstraint necessary_constraint(std::int64_t n);

KnownDegreeSet known_attainable(std::int64_t n);

// 1 + eps[0]*(ds[0]-1) + sum_{i>=1} eps[i]*(ds[i]-ds[i-1]) - eps[l]*ds[l-1]
// for l = ds.size(); eps has length l+1 with entries in {0,1}.
Int join_degree(const std::vector<Int>& ds, const std::vector<int>& eps);

struct IncrementChain {
    std::vector<Int> ds;
    std::vector<int> eps;
};

// A chain with all |d_i| = 1 whose join degree equals target; at most
// |target - 1| + 2 steps.
IncrementChain increment_chain(const Int& target);

// Degrees d_k for which a stabilizer-equivariant map fixed near the orbit
// point is known to exist: everything when k or n-k is even (antipodal
// factor), otherwise {0, 1} plus whatever the two join factors attain.
KnownDegreeSet admissible_local_degrees(std::int64_t n, std::int64_t k);

}  // namespace eqdeg::degrees
