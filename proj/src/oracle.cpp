#include "eqdeg/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "eqdeg/degrees.hpp"
#include "eqdeg/numtheory.hpp"

namespace eqdeg::oracle {

namespace {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

bool local_is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return n >= 2;
}

// Prime base when n = q^a with a >= 1, otherwise 0.
std::int64_t local_prime_power_base(std::int64_t n) {
    if (n < 2) return 0;
    std::int64_t q = 2;
    while (n % q != 0) ++q;
    std::int64_t m = n;
    while (m % q == 0) m /= q;
    return m == 1 ? q : 0;
}

// Next Pascal row from the previous one; row[k] = C(n,k).
std::vector<Int> next_pascal_row(const std::vector<Int>& prev) {
    std::vector<Int> row(prev.size() + 1, Int(1));
    for (std::size_t k = 1; k + 1 < row.size(); ++k) row[k] = prev[k - 1] + prev[k];
    return row;
}

struct SearchCoord {
    std::int64_t coeff;                   // C(n,k), from a local Pascal row
    std::vector<std::int64_t> candidates;  // allowed d_k values, canonical order
};

bool abs_less_i64(std::int64_t a, std::int64_t b) {
    std::int64_t aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
    if (aa != ab) return aa < ab;
    return a < b;
}

// Reachable-sum dynamic programming: suffix_reach[j] marks every value of
// sum_{i >= j} v_i * coeff_i, shifted by `offset`. Extraction walks forward
// picking the first candidate (canonical order) keeping the target reachable.
std::optional<std::vector<std::int64_t>> dp_select(const std::vector<SearchCoord>& coords,
                                                   std::int64_t target) {
    const std::size_t m = coords.size();
    std::int64_t offset = 0;
    for (const SearchCoord& c : coords) {
        std::int64_t worst = 0;
        for (std::int64_t v : c.candidates) worst = std::max(worst, v < 0 ? -v : v);
        offset += worst * c.coeff;
    }
    const std::int64_t width = 2 * offset + 1;
    std::vector<std::vector<char>> reach(m + 1, std::vector<char>(static_cast<std::size_t>(width), 0));
    reach[m][static_cast<std::size_t>(offset)] = 1;
    for (std::size_t j = m; j-- > 0;) {
        const SearchCoord& c = coords[j];
        for (std::int64_t s = 0; s < width; ++s) {
            if (!reach[j + 1][static_cast<std::size_t>(s)]) continue;
            for (std::int64_t v : c.candidates) {
                std::int64_t t = s + v * c.coeff;
                if (t >= 0 && t < width) reach[j][static_cast<std::size_t>(t)] = 1;
            }
        }
    }
    std::int64_t idx = target + offset;
    if (idx < 0 || idx >= width || !reach[0][static_cast<std::size_t>(idx)]) return std::nullopt;
    std::vector<std::int64_t> out(m, 0);
    std::int64_t rest = target;
    for (std::size_t j = 0; j < m; ++j) {
        bool chosen = false;
        for (std::int64_t v : coords[j].candidates) {
            std::int64_t t = rest - v * coords[j].coeff + offset;
            if (t >= 0 && t < width && reach[j + 1][static_cast<std::size_t>(t)]) {
                out[j] = v;
                rest -= v * coords[j].coeff;
                chosen = true;
                break;
            }
        }
        if (!chosen) return std::nullopt;  // cannot happen once reach[0] holds
    }
    return out;
}

std::vector<std::int64_t> coset_values(std::int64_t residue, std::int64_t modulus,
                                       std::int64_t bound, bool include_zero) {
    std::vector<std::int64_t> vals;
    if (include_zero) vals.push_back(0);
    std::int64_t start = -bound + ((residue - (-bound)) % modulus + modulus) % modulus;
    for (std::int64_t v = start; v <= bound; v += modulus)
        if (v != 0 || !include_zero) vals.push_back(v);
    std::sort(vals.begin(), vals.end(), abs_less_i64);
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::vector<std::int64_t> full_range(std::int64_t bound) {
    std::vector<std::int64_t> vals;
    for (std::int64_t v = -bound; v <= bound; ++v) vals.push_back(v);
    std::sort(vals.begin(), vals.end(), abs_less_i64);
    return vals;
}

constexpr std::int64_t kMaxSearchN = 12;
constexpr std::int64_t kMaxSearchBound = 100;

}  // namespace

CheckReport brute_gcd_check(std::int64_t n_max) {
    if (n_max < 2) throw std::domain_error("brute_gcd_check: n_max must be >= 2");
    Stopwatch timer;
    CheckReport report;
    report.name = "gcd_of_binomials";
    report.range = "2 <= n <= " + std::to_string(n_max);
    std::vector<Int> row = {Int(1), Int(1)};  // n = 1
    for (std::int64_t n = 2; n <= n_max; ++n) {
        row = next_pascal_row(row);
        Int g = 0;
        for (std::int64_t k = 1; k <= n - 1; ++k)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[static_cast<std::size_t>(k)].get_mpz_t());
        std::int64_t base = local_prime_power_base(n);
        Int predicted = base != 0 ? Int(static_cast<long>(base)) : Int(1);
        if (g != predicted)
            report.counterexamples.push_back("n=" + std::to_string(n) + ": direct gcd " +
                                             to_string(g) + " != predicted " + to_string(predicted));
        Int implemented = degrees::gcd_binomials(n);
        if (g != implemented)
            report.counterexamples.push_back("n=" + std::to_string(n) + ": direct gcd " +
                                             to_string(g) + " != gcd_binomials " + to_string(implemented));
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

CheckReport brute_lucas_check(std::int64_t n_max, const std::vector<std::int64_t>& primes) {
    if (n_max < 2) throw std::domain_error("brute_lucas_check: n_max must be >= 2");
    for (std::int64_t p : primes)
        if (!local_is_prime(p)) throw std::domain_error("brute_lucas_check: non-prime modulus");
    Stopwatch timer;
    CheckReport report;
    report.name = "lucas_and_kummer";
    std::string plist;
    for (std::int64_t p : primes) plist += (plist.empty() ? "" : ",") + std::to_string(p);
    report.range = "n <= " + std::to_string(n_max) + ", p in {" + plist + "}";
    std::vector<Int> row = {Int(1)};  // n = 0
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (n > 0) row = next_pascal_row(row);
        for (std::int64_t k = 0; k <= n; ++k) {
            const Int& c = row[static_cast<std::size_t>(k)];
            for (std::int64_t p : primes) {
                std::int64_t expected = pos_mod(c, p);
                std::int64_t got = numtheory::lucas_residue(n, k, p);
                if (got != expected) {
                    report.counterexamples.push_back(
                        "C(" + std::to_string(n) + "," + std::to_string(k) + ") mod " +
                        std::to_string(p) + ": lucas_residue " + std::to_string(got) +
                        " != " + std::to_string(expected));
                    continue;
                }
                std::int64_t vals = 0;
                Int rest = c;
                while (rest != 0 && mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
                    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
                    ++vals;
                }
                std::int64_t claimed = numtheory::padic_valuation_binomial(n, k, p);
                if (claimed != vals)
                    report.counterexamples.push_back(
                        "C(" + std::to_string(n) + "," + std::to_string(k) + "), p=" +
                        std::to_string(p) + ": valuation " + std::to_string(claimed) + " != " +
                        std::to_string(vals));
            }
        }
    }
    report.elapsed_seconds = timer.seconds();
    return report;
}

std::optional<std::vector<std::int64_t>> exhaustive_zero_search(std::int64_t n,
                                                                std::int64_t bound) {
    if (n < 2 || n > kMaxSearchN)
        throw std::domain_error("exhaustive_zero_search: n must lie in [2, 12]");
    if (bound < 0 || bound > kMaxSearchBound)
        throw std::domain_error("exhaustive_zero_search: bound must lie in [0, 100]");
    std::int64_t base = local_prime_power_base(n);
    if (base != 0 || (n % 2 == 0 && local_prime_power_base(n / 2) != 0 && (n / 2) % 2 == 1))
        throw std::domain_error(
            "exhaustive_zero_search: n must be neither a prime power nor twice a prime power");

    std::vector<Int> row = {Int(1)};
    for (std::int64_t i = 1; i <= n; ++i) row = next_pascal_row(row);

    std::vector<SearchCoord> coords;
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        SearchCoord sc;
        sc.coeff = to_i64(row[static_cast<std::size_t>(k)]);
        std::int64_t q = k >= 2 ? local_prime_power_base(k) : 0;
        if (k == 1) {
            std::int64_t p = local_prime_power_base(n - 1);
            sc.candidates = p != 0 ? coset_values(1, p, bound, false) : full_range(bound);
        } else if (q != 0) {
            sc.candidates = coset_values(1, q, bound, true);
        } else {
            sc.candidates = full_range(bound);
        }
        if (sc.candidates.empty()) return std::nullopt;
        coords.push_back(std::move(sc));
    }
    return dp_select(coords, 1);  // sum d_k C(n,k) = 1
}

std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> exhaustive_degree_search(
    std::int64_t n, const Int& d, std::int64_t bound) {
    if (n < 2 || n > kMaxSearchN)
        throw std::domain_error("exhaustive_degree_search: n must lie in [2, 12]");
    if (bound < 0 || bound > kMaxSearchBound)
        throw std::domain_error("exhaustive_degree_search: bound must lie in [0, 100]");
    if (!degrees::necessary_constraint(n).satisfies(d)) return std::nullopt;

    std::vector<Int> row = {Int(1)};
    for (std::int64_t i = 1; i <= n; ++i) row = next_pascal_row(row);

    std::vector<SearchCoord> coords;
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        SearchCoord sc;
        sc.coeff = to_i64(row[static_cast<std::size_t>(k)]);
        for (const Int& v : degrees::admissible_local_degrees(n, k).values_within(bound))
            sc.candidates.push_back(to_i64(v));
        std::sort(sc.candidates.begin(), sc.candidates.end(), abs_less_i64);
        if (sc.candidates.empty()) return std::nullopt;
        coords.push_back(std::move(sc));
    }
    Int target = Int(1) - d;
    if (!fits_i64(target)) return std::nullopt;
    auto picked = dp_select(coords, to_i64(target));
    if (!picked) return std::nullopt;
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        std::int64_t v = (*picked)[static_cast<std::size_t>(k - 1)];
        if (v != 0) entries.push_back({k, v});
    }
    return entries;
}

}  // namespace eqdeg::oracle
