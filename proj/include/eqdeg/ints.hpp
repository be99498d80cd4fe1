#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace eqdeg {

// All degree and coefficient arithmetic is exact; Int is the only numeric
// type that ever holds a binomial coefficient or a certificate entry.
using Int = mpz_class;

// Least nonnegative residue of a modulo m (m > 0). Works for negative a.
std::int64_t pos_mod(const Int& a, std::int64_t m);

// Exact base^exp for exp >= 0.
Int ipow(std::int64_t base, std::int64_t exp);

// g = gcd(a, b) >= 0 together with one Bezout pair: g = x*a + y*b.
// The pair is the one produced by the textbook recursion
//   ext_gcd(a, 0) = (a, 1, 0)
//   ext_gcd(a, b) = (g, y', x' - (a/b)*y')  where (g, x', y') = ext_gcd(b, a mod b)
// which is what makes canonical Diophantine solutions reproducible.
struct ExtGcd {
    Int g, x, y;
};
ExtGcd ext_gcd(const Int& a, const Int& b);

bool fits_i64(const Int& v);
std::int64_t to_i64(const Int& v);  // throws std::overflow_error if it does not fit

// Strict total order by (|a|, a); the canonical enumeration order for
// bounded searches: 0, -1, 1, -2, 2, ...
bool abs_less(const Int& a, const Int& b);

std::string to_string(const Int& v);

}  // namespace eqdeg
