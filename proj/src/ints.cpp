#include "eqdeg/ints.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace eqdeg {

std::int64_t pos_mod(const Int& a, std::int64_t m) {
    if (m <= 0) throw std::domain_error("pos_mod: modulus must be positive");
    Int r;
    Int mm(static_cast<long>(m));
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
    return to_i64(r);
}

Int ipow(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw std::domain_error("ipow: negative exponent");
    Int r;
    Int b(static_cast<long>(base));
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

ExtGcd ext_gcd(const Int& a, const Int& b) {
    if (a < 0 || b < 0) throw std::domain_error("ext_gcd: arguments must be nonnegative");
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_x -= q * x;
        std::swap(old_x, x);
        old_y -= q * y;
        std::swap(old_y, y);
    }
    return {old_r, old_x, old_y};
}

bool fits_i64(const Int& v) {
    static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 assumed");
    return v.fits_slong_p();
}

std::int64_t to_i64(const Int& v) {
    if (!fits_i64(v)) throw std::overflow_error("to_i64: value out of 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
}

bool abs_less(const Int& a, const Int& b) {
    int c = mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
    if (c != 0) return c < 0;
    return a < b;
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace eqdeg
