#include "eqdeg/numtheory.hpp"

#include <stdexcept>
#include <string>

namespace eqdeg::numtheory {

namespace {

constexpr std::int64_t kFactorizeLimit = 1'000'000'000;

}  // namespace

const char* kind_name(NKind kind) {
    switch (kind) {
        case NKind::PrimePower: return "PrimePower";
        case NKind::TwicePrimePower: return "TwicePrimePower";
        case NKind::OddNonPrimePower: return "OddNonPrimePower";
        case NKind::EvenAdmissible: return "EvenAdmissible";
    }
    return "?";
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeFactorization factorize(std::int64_t n) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");
    if (n > kFactorizeLimit) throw std::domain_error("factorize: n exceeds trial-division scale (10^9)");
    PrimeFactorization out;
    auto strip = [&](std::int64_t p) {
        std::int64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    for (std::int64_t p = 3; p * p <= n; p += 2) strip(p);
    if (n > 1) out.push_back({n, 1});
    return out;
}

Int binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::domain_error("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int multinomial(std::int64_t n, const std::vector<std::int64_t>& parts) {
    if (parts.empty()) throw std::domain_error("multinomial: parts must be nonempty");
    std::int64_t sum = 0;
    for (std::int64_t a : parts) {
        if (a <= 0) throw std::domain_error("multinomial: parts must be positive");
        sum += a;
    }
    if (sum != n) throw std::domain_error("multinomial: parts must sum to n");
    // Product of binomials C(n, a1) C(n-a1, a2) ...; stays integral at every step.
    Int r = 1;
    std::int64_t rem = n;
    for (std::int64_t a : parts) {
        r *= binomial(rem, a);
        rem -= a;
    }
    return r;
}

std::vector<std::int64_t> base_digits(std::int64_t n, std::int64_t p) {
    if (n < 0) throw std::domain_error("base_digits: n must be >= 0");
    if (p < 2) throw std::domain_error("base_digits: base must be >= 2");
    std::vector<std::int64_t> digits;
    while (n > 0) {
        digits.push_back(n % p);
        n /= p;
    }
    return digits;
}

std::int64_t lucas_residue(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (k < 0 || k > n) throw std::domain_error("lucas_residue: need 0 <= k <= n");
    if (!is_prime(p)) throw std::domain_error("lucas_residue: p must be prime");
    std::int64_t r = 1;
    while (n > 0 || k > 0) {
        std::int64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        r = (r * pos_mod(binomial(nd, kd), p)) % p;
        n /= p;
        k /= p;
    }
    return r;
}

std::int64_t padic_valuation_binomial(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (k < 0 || k > n) throw std::domain_error("padic_valuation_binomial: need 0 <= k <= n");
    if (!is_prime(p)) throw std::domain_error("padic_valuation_binomial: p must be prime");
    // Carries when adding k and n-k in base p.
    std::int64_t a = k, b = n - k;
    std::int64_t carry = 0, carries = 0;
    while (a > 0 || b > 0 || carry > 0) {
        std::int64_t s = a % p + b % p + carry;
        carry = s >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

NClassification classify(std::int64_t n) {
    if (n < 2) throw std::domain_error("classify: n must be >= 2");
    PrimeFactorization f = factorize(n);
    if (f.size() == 1) return {NKind::PrimePower, f[0].prime, f[0].exponent};
    if (n % 2 == 0) {
        PrimeFactorization half = factorize(n / 2);
        if (half.size() == 1 && half[0].prime != 2)
            return {NKind::TwicePrimePower, half[0].prime, half[0].exponent};
        return {NKind::EvenAdmissible, 0, 0};
    }
    return {NKind::OddNonPrimePower, 0, 0};
}

std::vector<PrimePowerRep> prime_power_representations(std::int64_t n) {
    if (n < 2) throw std::domain_error("prime_power_representations: n must be >= 2");
    std::vector<PrimePowerRep> reps;
    for (std::int64_t p = 2; p < n; ++p) {
        if (!is_prime(p)) continue;
        // For each t with p^t < n, check whether n - p^t is p^s with s < t.
        Int pt = p;
        for (std::int64_t t = 1; pt < n; ++t, pt *= p) {
            Int rem = Int(static_cast<long>(n)) - pt;
            if (rem < 1 || rem >= pt) continue;  // need p^s < p^t
            Int ps = 1;
            for (std::int64_t s = 0; ps <= rem; ++s, ps *= p) {
                if (ps == rem) {
                    reps.push_back({p, s, t});
                    break;
                }
            }
        }
    }
    return reps;
}

std::optional<std::vector<Int>> solve_linear_diophantine(const std::vector<Int>& c,
                                                         const Int& target) {
    for (const Int& ci : c)
        if (ci < 0) throw std::domain_error("solve_linear_diophantine: coefficients must be nonnegative");
    const std::size_t m = c.size();
    std::vector<ExtGcd> steps(m);
    Int g = 0;
    for (std::size_t i = 0; i < m; ++i) {
        steps[i] = ext_gcd(g, c[i]);
        g = steps[i].g;
    }
    std::vector<Int> b(m, Int(0));
    if (g == 0) {
        if (target == 0) return b;
        return std::nullopt;
    }
    if (!mpz_divisible_p(target.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    Int u;
    mpz_divexact(u.get_mpz_t(), target.get_mpz_t(), g.get_mpz_t());
    for (std::size_t i = m; i-- > 0;) {
        b[i] = u * steps[i].y;
        u *= steps[i].x;
    }
    return b;
}

}  // namespace eqdeg::numtheory
