#include <doctest.h>

#include <random>

#include "eqdeg/numtheory.hpp"

using namespace eqdeg;
using namespace eqdeg::numtheory;

namespace {

// Independent binomial oracle: Pascal's triangle, exact addition only.
std::vector<std::vector<Int>> pascal_triangle(std::int64_t n_max) {
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n_max + 1));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        auto& row = rows[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n + 1), Int(1));
        for (std::int64_t k = 1; k < n; ++k)
            row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
}

// Independent factorial-ratio oracle.
Int factorial(std::int64_t n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace

TEST_CASE("factorize on small inputs") {
    CHECK(factorize(12) == PrimeFactorization{{2, 2}, {3, 1}});
    CHECK(factorize(27) == PrimeFactorization{{3, 3}});
    CHECK(factorize(97) == PrimeFactorization{{97, 1}});
    CHECK_THROWS_AS(factorize(1), std::domain_error);
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize reconstructs its input") {
    for (std::int64_t n = 2; n <= 2000; ++n) {
        Int product = 1;
        std::int64_t prev = 0;
        for (const auto& f : factorize(n)) {
            CHECK(is_prime(f.prime));
            CHECK(f.prime > prev);
            prev = f.prime;
            product *= ipow(f.prime, f.exponent);
        }
        CHECK(product == n);
    }
}

TEST_CASE("binomial matches the factorial-ratio oracle") {
    CHECK(binomial(12, 4) == 495);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
    CHECK(binomial(12, 4) == factorial(12) / (factorial(4) * factorial(8)));
}

TEST_CASE("binomial equals the Pascal recurrence for all n <= 300") {
    auto rows = pascal_triangle(300);
    for (std::int64_t n = 0; n <= 300; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
            REQUIRE(binomial(n, k) == rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
}

TEST_CASE("multinomial") {
    CHECK(multinomial(6, {3, 3}) == 20);
    CHECK(multinomial(7, {7}) == 1);
    CHECK(multinomial(6, {1, 1, 1, 1, 1, 1}) == 720);
    CHECK_THROWS_AS(multinomial(6, {3, 2}), std::domain_error);
    CHECK_THROWS_AS(multinomial(6, {}), std::domain_error);
    // factorial oracle on a batch of random part lists
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 18);
        std::vector<std::int64_t> parts;
        std::int64_t rest = n;
        while (rest > 0) {
            std::int64_t a = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(rest));
            parts.push_back(a);
            rest -= a;
        }
        Int expected = factorial(n);
        for (std::int64_t a : parts) expected /= factorial(a);
        CHECK(multinomial(n, parts) == expected);
    }
}

TEST_CASE("base_digits") {
    CHECK(base_digits(12, 3) == std::vector<std::int64_t>{0, 1, 1});
    CHECK(base_digits(0, 7) == std::vector<std::int64_t>{});
    CHECK(base_digits(12, 2) == std::vector<std::int64_t>{0, 0, 1, 1});
    CHECK_THROWS_AS(base_digits(5, 1), std::domain_error);
    for (std::int64_t n = 0; n <= 500; ++n)
        for (std::int64_t p : {2, 3, 5, 11}) {
            Int back = 0, pw = 1;
            for (std::int64_t digit : base_digits(n, p)) {
                CHECK(digit >= 0);
                CHECK(digit < p);
                back += digit * pw;
                pw *= p;
            }
            CHECK(back == n);
        }
}

TEST_CASE("lucas residue on the worked examples") {
    CHECK(lucas_residue(12, 4, 3) == 0);   // 495 = 0 (mod 3)
    CHECK(lucas_residue(12, 3, 3) == 1);   // 220 = 1 (mod 3)
    CHECK(lucas_residue(4, 2, 7) == 6);    // 6 = 6 (mod 7)
    CHECK_THROWS_AS(lucas_residue(4, 5, 7), std::domain_error);
    CHECK_THROWS_AS(lucas_residue(4, 2, 6), std::domain_error);
}

TEST_CASE("p-adic valuation on the worked examples") {
    CHECK(padic_valuation_binomial(12, 4, 3) == 2);  // 495 = 3^2 * 55
    CHECK(padic_valuation_binomial(12, 3, 3) == 0);  // 220 coprime to 3
    CHECK(padic_valuation_binomial(8, 4, 2) == 1);   // 70 = 2 * 35
    CHECK_THROWS_AS(padic_valuation_binomial(3, 4, 2), std::domain_error);
}

TEST_CASE("lucas and kummer agree with direct arithmetic up to n = 120") {
    auto rows = pascal_triangle(120);
    for (std::int64_t n = 0; n <= 120; ++n)
        for (std::int64_t k = 0; k <= n; ++k) {
            const Int& c = rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            for (std::int64_t p : {2, 3, 5, 7, 11}) {
                REQUIRE(lucas_residue(n, k, p) == pos_mod(c, p));
                std::int64_t v = padic_valuation_binomial(n, k, p);
                Int pv = ipow(p, v);
                REQUIRE(mpz_divisible_p(c.get_mpz_t(), pv.get_mpz_t()) != 0);
                Int pv1 = pv * p;
                REQUIRE(mpz_divisible_p(c.get_mpz_t(), pv1.get_mpz_t()) == 0);
            }
        }
}

TEST_CASE("classify on the worked examples") {
    CHECK(classify(9) == NClassification{NKind::PrimePower, 3, 2});
    CHECK(classify(6) == NClassification{NKind::TwicePrimePower, 3, 1});
    CHECK(classify(12) == NClassification{NKind::EvenAdmissible, 0, 0});
    CHECK(classify(2) == NClassification{NKind::PrimePower, 2, 1});
    CHECK(classify(8) == NClassification{NKind::PrimePower, 2, 3});
    CHECK(classify(15) == NClassification{NKind::OddNonPrimePower, 0, 0});
    CHECK(classify(18) == NClassification{NKind::TwicePrimePower, 3, 2});
    CHECK_THROWS_AS(classify(1), std::domain_error);
}

TEST_CASE("classify is total and the variants are mutually exclusive up to 1000") {
    for (std::int64_t n = 2; n <= 1000; ++n) {
        NClassification cls = classify(n);
        bool prime_power = factorize(n).size() == 1;
        bool twice_odd_prime_power = false;
        if (n % 2 == 0 && n >= 4) {
            auto half = factorize(n / 2);
            twice_odd_prime_power = half.size() == 1 && half[0].prime != 2;
        }
        switch (cls.kind) {
            case NKind::PrimePower:
                CHECK(prime_power);
                CHECK(ipow(cls.p, cls.k) == n);
                break;
            case NKind::TwicePrimePower:
                CHECK(!prime_power);
                CHECK(twice_odd_prime_power);
                CHECK(cls.p % 2 == 1);
                CHECK(2 * ipow(cls.p, cls.k) == n);
                break;
            case NKind::OddNonPrimePower:
                CHECK(n % 2 == 1);
                CHECK(!prime_power);
                break;
            case NKind::EvenAdmissible:
                CHECK(n % 2 == 0);
                CHECK(!prime_power);
                CHECK(!twice_odd_prime_power);
                break;
        }
    }
}

TEST_CASE("prime power representations on the worked examples") {
    CHECK(prime_power_representations(12) ==
          std::vector<PrimePowerRep>{{2, 2, 3}, {3, 1, 2}, {11, 0, 1}});
    CHECK(prime_power_representations(15) == std::vector<PrimePowerRep>{});
    CHECK(prime_power_representations(6) == std::vector<PrimePowerRep>{{2, 1, 2}, {5, 0, 1}});
    CHECK(prime_power_representations(30) ==
          std::vector<PrimePowerRep>{{3, 1, 3}, {5, 1, 2}, {29, 0, 1}});
}

TEST_CASE("prime power representations satisfy their invariants up to 1000") {
    for (std::int64_t n = 2; n <= 1000; ++n) {
        auto reps = prime_power_representations(n);
        int with_s_zero = 0;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const auto& r = reps[i];
            CHECK(is_prime(r.p));
            CHECK(r.s >= 0);
            CHECK(r.s < r.t);
            CHECK(ipow(r.p, r.s) + ipow(r.p, r.t) == n);
            if (i > 0) CHECK(reps[i - 1].p < r.p);
            if (r.s == 0) ++with_s_zero;
        }
        CHECK(with_s_zero <= 1);
    }
}

TEST_CASE("prime power representations found by independent brute force up to 400") {
    // Oracle: try every prime p < n and every exponent pair directly.
    for (std::int64_t n = 2; n <= 400; ++n) {
        std::vector<PrimePowerRep> expected;
        for (std::int64_t p = 2; p < n; ++p) {
            if (!is_prime(p)) continue;
            for (std::int64_t s = 0; ipow(p, s) < n; ++s)
                for (std::int64_t t = s + 1; ipow(p, t) < n; ++t)
                    if (ipow(p, s) + ipow(p, t) == n) expected.push_back({p, s, t});
        }
        CHECK(prime_power_representations(n) == expected);
    }
}

TEST_CASE("diophantine solver on the worked examples") {
    auto sol = solve_linear_diophantine({Int(6), Int(10), Int(15)}, Int(1));
    REQUIRE(sol.has_value());
    CHECK(Int(6) * (*sol)[0] + Int(10) * (*sol)[1] + Int(15) * (*sol)[2] == 1);

    CHECK(!solve_linear_diophantine({Int(4), Int(6)}, Int(1)).has_value());

    auto single = solve_linear_diophantine({Int(66)}, Int(-2376));
    REQUIRE(single.has_value());
    CHECK((*single)[0] == -36);

    auto zeros0 = solve_linear_diophantine({Int(0), Int(0)}, Int(0));
    REQUIRE(zeros0.has_value());
    CHECK(*zeros0 == std::vector<Int>{Int(0), Int(0)});
    CHECK(!solve_linear_diophantine({Int(0), Int(0)}, Int(3)).has_value());
    CHECK_THROWS_AS(solve_linear_diophantine({Int(-2)}, Int(1)), std::domain_error);
}

TEST_CASE("diophantine solutions verify by substitution on random instances") {
    std::mt19937_64 rng(42);
    int solved = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t m = 1 + rng() % 6;
        std::vector<Int> c;
        Int g = 0;
        for (std::size_t i = 0; i < m; ++i) {
            c.emplace_back(static_cast<long>(rng() % 500));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.back().get_mpz_t());
        }
        Int target(static_cast<long>(static_cast<std::int64_t>(rng() % 20001) - 10000));
        auto sol = solve_linear_diophantine(c, target);
        bool solvable = g == 0 ? target == 0
                               : mpz_divisible_p(target.get_mpz_t(), g.get_mpz_t()) != 0;
        REQUIRE(sol.has_value() == solvable);
        if (sol) {
            Int sum = 0;
            for (std::size_t i = 0; i < m; ++i) sum += (*sol)[i] * c[i];
            REQUIRE(sum == target);
            ++solved;
        }
    }
    CHECK(solved > 100);  // the instance distribution must actually exercise the solver
}
