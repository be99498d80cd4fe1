#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eqdeg/ints.hpp"

namespace eqdeg::numtheory {

struct PrimeFactor {
    std::int64_t prime;
    std::int64_t exponent;
    bool operator==(const PrimeFactor&) const = default;
};
// Primes strictly increasing, product of prime^exponent equals the input.
using PrimeFactorization = std::vector<PrimeFactor>;

// The four-way case split driving everything else. Exactly one kind applies
// to each n >= 2; TwicePrimePower requires p odd (2*2^k is itself a prime
// power, so it lands in PrimePower).
enum class NKind { PrimePower, TwicePrimePower, OddNonPrimePower, EvenAdmissible };

struct NClassification {
    NKind kind;
    std::int64_t p = 0;  // prime base, meaningful for (Twice)PrimePower
    std::int64_t k = 0;  // exponent, meaningful for (Twice)PrimePower
    bool operator==(const NClassification&) const = default;
};

const char* kind_name(NKind kind);

// One representation n = p^s + p^t with 0 <= s < t. For a fixed prime p at
// most one such representation exists, and at most one representation over
// all primes has s = 0.
struct PrimePowerRep {
    std::int64_t p;
    std::int64_t s;
    std::int64_t t;
    bool operator==(const PrimePowerRep&) const = default;
};

bool is_prime(std::int64_t n);

// Trial division; n in [2, 10^9].
PrimeFactorization factorize(std::int64_t n);

// Exact C(n, k); zero when k < 0 or k > n. Requires n >= 0.
Int binomial(std::int64_t n, std::int64_t k);

// Exact n! / (parts[0]! * ... * parts.back()!). Parts must be positive and
// sum to n.
Int multinomial(std::int64_t n, const std::vector<std::int64_t>& parts);

// Digits of n in base p, least significant first; empty for n = 0.
std::vector<std::int64_t> base_digits(std::int64_t n, std::int64_t p);

// C(n, k) mod p as the product of digitwise binomials in base p.
std::int64_t lucas_residue(std::int64_t n, std::int64_t k, std::int64_t p);

// Number of carries when adding k and n-k in base p; the exact p-adic
// valuation of C(n, k).
std::int64_t padic_valuation_binomial(std::int64_t n, std::int64_t k, std::int64_t p);

NClassification classify(std::int64_t n);

// All (p, s, t) with p prime, 0 <= s < t and p^s + p^t = n, sorted by p.
std::vector<PrimePowerRep> prime_power_representations(std::int64_t n);

// Finds b with sum b[i]*c[i] = target whenever gcd of the c[i] divides the
// target; the c[i] must be nonnegative. The solution is canonical: a
// left-to-right extended-Euclid accumulation followed by back-substitution,
// so a given input order always yields the same b.
std::optional<std::vector<Int>> solve_linear_diophantine(const std::vector<Int>& c,
                                                         const Int& target);

}  // namespace eqdeg::numtheory
