#include "eqdeg/certificates.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "eqdeg/errors.hpp"

namespace eqdeg::certificates {

using numtheory::NKind;
using numtheory::PrimePowerRep;

namespace {

// ---------------------------------------------------------------------------
// zero-certificate template

enum class KCase { TPower, SPower, OtherPrimePower, Free };

struct KTemplate {
    KCase kase = KCase::Free;
    std::int64_t q = 0;  // congruence prime for SPower / OtherPrimePower
};

// The four-way case assignment for k = 1..n-1 given the representations
// n = p_i^{s_i} + p_i^{t_i}.
std::vector<KTemplate> zero_template(std::int64_t n, const std::vector<PrimePowerRep>& reps) {
    std::vector<KTemplate> tmpl(static_cast<std::size_t>(n - 1));
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        KTemplate& t = tmpl[static_cast<std::size_t>(k - 1)];
        bool matched = false;
        for (const PrimePowerRep& r : reps) {
            if (ipow(r.p, r.t) == k) {
                t = {KCase::TPower, r.p};
                matched = true;
                break;
            }
            if (ipow(r.p, r.s) == k) {
                t = {KCase::SPower, r.p};
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (k >= 2) {
            numtheory::PrimeFactorization f = numtheory::factorize(k);
            if (f.size() == 1) {
                t = {KCase::OtherPrimePower, f[0].prime};
                continue;
            }
        }
        t = {KCase::Free, 0};
    }
    return tmpl;
}

std::vector<Int> canonical_c(std::int64_t n, const std::vector<KTemplate>& tmpl) {
    std::vector<Int> c(static_cast<std::size_t>(n - 1));
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        const KTemplate& t = tmpl[static_cast<std::size_t>(k - 1)];
        switch (t.kase) {
            case KCase::TPower: c[k - 1] = 0; break;
            case KCase::SPower:
            case KCase::OtherPrimePower: c[k - 1] = t.q * numtheory::binomial(n, k); break;
            case KCase::Free: c[k - 1] = numtheory::binomial(n, k); break;
        }
    }
    return c;
}

Int canonical_N(std::int64_t n, const std::vector<KTemplate>& tmpl) {
    Int N = 1;
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        KCase kase = tmpl[static_cast<std::size_t>(k - 1)].kase;
        if (kase == KCase::SPower || kase == KCase::OtherPrimePower) N -= numtheory::binomial(n, k);
    }
    return N;
}

// ---------------------------------------------------------------------------
// report helpers

void add_check(VerifyReport& report, const std::string& name, bool passed,
               const std::string& detail = "") {
    report.checks.push_back({name, passed, detail});
}

// ---------------------------------------------------------------------------
// closed-form construction for odd n (any degree the gcd allows, every
// entry justified by the antipodal map on the even join factor)

std::optional<MapCertificate> build_odd(std::int64_t n, const Int& d) {
    if (n < 3 || n % 2 == 0) throw std::logic_error("build_odd: n must be odd and >= 3");
    MapCertificate cert;
    cert.n = n;
    cert.degree = d;
    if (d == 1) return cert;
    std::vector<Int> c(static_cast<std::size_t>(n - 1));
    for (std::int64_t k = 1; k <= n - 1; ++k) c[k - 1] = numtheory::binomial(n, k);
    auto b = numtheory::solve_linear_diophantine(c, Int(1) - d);
    if (!b) return std::nullopt;
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        const Int& v = (*b)[static_cast<std::size_t>(k - 1)];
        if (v == 0) continue;
        LocalEntry e;
        e.k = k;
        e.d = v;
        e.just.kind = Justification::Kind::AntipodalJoin;
        cert.entries.push_back(std::move(e));
    }
    return cert;
}

std::optional<Justification> justify_local(std::int64_t n, std::int64_t k, const Int& v) {
    if (k % 2 == 0 || (n - k) % 2 == 0) {
        Justification j;
        j.kind = Justification::Kind::AntipodalJoin;
        return j;
    }
    for (std::int64_t m : {k, n - k}) {
        if (m < 3) continue;
        if (!degrees::known_attainable(m).contains(v)) continue;
        auto sub = build_odd(m, v);
        if (!sub) continue;
        Justification j;
        j.kind = Justification::Kind::FactorRecursion;
        j.m = m;
        j.sub = std::make_shared<const MapCertificate>(std::move(*sub));
        return j;
    }
    if (v == 1) {
        std::int64_t m = k >= 2 ? k : n - k;
        if (m >= 2) {
            MapCertificate trivial;
            trivial.n = m;
            trivial.degree = 1;
            Justification j;
            j.kind = Justification::Kind::FactorRecursion;
            j.m = m;
            j.sub = std::make_shared<const MapCertificate>(std::move(trivial));
            return j;
        }
    }
    return std::nullopt;
}

std::int64_t floor_log2(std::int64_t n) {
    std::int64_t e = 0;
    while ((std::int64_t{1} << (e + 1)) <= n) ++e;
    return e;
}

// ---------------------------------------------------------------------------
// bounded search (route iv): odd coordinates range over their admissible
// candidate lists, even coordinates are solved as a bounded Diophantine
// residual with divisibility and range pruning.

struct EvenCoord {
    std::int64_t k;
    Int coeff;
};

struct SearchContext {
    std::int64_t bound = 0;
    std::vector<EvenCoord> evens;     // sorted by descending coefficient
    std::vector<Int> suffix_gcd;      // gcd of coefficients after index i
    std::vector<Int> suffix_span;     // bound * sum of coefficients after index i
    std::int64_t budget = 0;
};

// All x in [lo, hi] with x = x0 (mod step), ordered by (|x|, x).
std::vector<Int> progression_by_abs(const Int& lo, const Int& hi, const Int& x0, const Int& step) {
    std::vector<Int> xs;
    if (lo > hi) return xs;
    Int diff = x0 - lo;
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), diff.get_mpz_t(), step.get_mpz_t());
    for (Int x = lo + r; x <= hi; x += step) xs.push_back(x);
    std::sort(xs.begin(), xs.end(), abs_less);
    return xs;
}

bool solve_even(SearchContext& ctx, std::size_t idx, const Int& rest,
                std::vector<Int>& out) {
    if (ctx.budget-- <= 0) return false;
    if (idx == ctx.evens.size()) return rest == 0;
    const Int& c = ctx.evens[idx].coeff;
    const Int& span = ctx.suffix_span[idx];
    const Int& g = ctx.suffix_gcd[idx];
    // |rest - x*c| <= span and x in [-bound, bound]
    Int lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), Int(rest - span).get_mpz_t(), c.get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), Int(rest + span).get_mpz_t(), c.get_mpz_t());
    if (lo < -ctx.bound) lo = -ctx.bound;
    if (hi > ctx.bound) hi = ctx.bound;
    if (lo > hi) return false;
    std::vector<Int> xs;
    if (g == 0) {
        // last coordinate: exact division or nothing
        if (!mpz_divisible_p(rest.get_mpz_t(), c.get_mpz_t())) return false;
        Int x = rest / c;
        if (x < lo || x > hi) return false;
        xs.push_back(x);
    } else {
        // need x*c = rest (mod g)
        Int gamma;
        mpz_gcd(gamma.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        if (!mpz_divisible_p(rest.get_mpz_t(), gamma.get_mpz_t())) return false;
        Int step = g / gamma;
        Int x0 = 0;
        if (step != 1) {
            Int cg = (c / gamma) % step;
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), cg.get_mpz_t(), step.get_mpz_t()) == 0)
                return false;  // cannot happen: c/gamma coprime to step
            x0 = ((rest / gamma) % step) * inv % step;
        }
        xs = progression_by_abs(lo, hi, x0, step);
    }
    for (const Int& x : xs) {
        out[idx] = x;
        if (solve_even(ctx, idx + 1, rest - x * c, out)) return true;
    }
    return false;
}

struct OddCoord {
    std::int64_t k;
    Int coeff;
    std::vector<Int> candidates;  // nonzero, ordered by (|v|, v)
};

// Subset-sum over Z_q: can the full coordinate system reach target mod q?
bool residue_feasible(const std::vector<OddCoord>& odds,
                      const std::vector<EvenCoord>& evens, const Int& target, std::int64_t q) {
    for (const EvenCoord& e : evens)
        if (pos_mod(e.coeff, q) != 0) return true;  // unconstrained coordinate spans Z_q
    std::vector<char> reach(static_cast<std::size_t>(q), 0);
    reach[0] = 1;
    for (const OddCoord& o : odds) {
        std::set<std::int64_t> deltas = {0};
        std::int64_t cq = pos_mod(o.coeff, q);
        for (const Int& v : o.candidates) deltas.insert(pos_mod(v, q) * cq % q);
        std::vector<char> next(static_cast<std::size_t>(q), 0);
        for (std::int64_t r = 0; r < q; ++r) {
            if (!reach[r]) continue;
            for (std::int64_t dl : deltas) next[(r + dl) % q] = 1;
        }
        reach.swap(next);
    }
    return reach[static_cast<std::size_t>(pos_mod(target, q))] != 0;
}

struct SearchResult {
    bool found = false;
    std::vector<EntryValue> entries;
};

SearchResult bounded_search(std::int64_t n, const Int& d, std::int64_t bound) {
    const Int target = Int(1) - d;  // = sum d_k C(n,k)

    std::vector<OddCoord> odds;
    for (std::int64_t k = 1; k <= n - 1; k += 2) {
        OddCoord o;
        o.k = k;
        o.coeff = numtheory::binomial(n, k);
        std::set<std::string> seen;
        std::vector<Int> vals;
        for (std::int64_t m : {k, n - k}) {
            if (m < 3) continue;
            for (const Int& v : degrees::known_attainable(m).values_within(bound)) {
                if (v == 0) continue;
                if (seen.insert(to_string(v)).second) vals.push_back(v);
            }
        }
        std::sort(vals.begin(), vals.end(), abs_less);
        o.candidates = std::move(vals);
        odds.push_back(std::move(o));
    }

    SearchContext ctx;
    ctx.bound = bound;
    for (std::int64_t k = 2; k <= n - 1; k += 2) ctx.evens.push_back({k, numtheory::binomial(n, k)});
    std::sort(ctx.evens.begin(), ctx.evens.end(), [](const EvenCoord& a, const EvenCoord& b) {
        if (a.coeff != b.coeff) return a.coeff > b.coeff;
        return a.k < b.k;
    });
    const std::size_t m = ctx.evens.size();
    ctx.suffix_gcd.assign(m, Int(0));
    ctx.suffix_span.assign(m, Int(0));
    for (std::size_t i = m; i-- > 0;) {
        if (i + 1 < m) {
            mpz_gcd(ctx.suffix_gcd[i].get_mpz_t(), ctx.suffix_gcd[i + 1].get_mpz_t(),
                    ctx.evens[i + 1].coeff.get_mpz_t());
            ctx.suffix_span[i] = ctx.suffix_span[i + 1] + ctx.evens[i + 1].coeff * bound;
        }
    }
    Int even_gcd = 0;
    Int even_span = 0;
    for (const EvenCoord& e : ctx.evens) {
        mpz_gcd(even_gcd.get_mpz_t(), even_gcd.get_mpz_t(), e.coeff.get_mpz_t());
        even_span += e.coeff * bound;
    }

    // Residue feasibility over every prime q <= n; an unreachable residue
    // class refutes the whole bounded space at once.
    for (std::int64_t q = 2; q <= n; ++q) {
        if (!numtheory::is_prime(q)) continue;
        if (!residue_feasible(odds, ctx.evens, target, q)) return {};
    }

    constexpr std::int64_t kBudget = 4'000'000;
    ctx.budget = kBudget;

    std::vector<Int> even_out(m, Int(0));
    std::vector<std::size_t> support;
    std::vector<Int> chosen(odds.size(), Int(0));

    auto try_assignment = [&](const Int& odd_sum) -> bool {
        Int rest = target - odd_sum;
        if (even_gcd == 0) {
            if (rest != 0) return false;
        } else {
            if (!mpz_divisible_p(rest.get_mpz_t(), even_gcd.get_mpz_t())) return false;
        }
        if (abs(rest) > even_span) return false;
        std::fill(even_out.begin(), even_out.end(), Int(0));
        return solve_even(ctx, 0, rest, even_out);
    };

    // Enumerate supports (sets of odd coordinates used) by increasing size,
    // then values per support in canonical order.
    std::function<bool(std::size_t, Int)> assign = [&](std::size_t pos, Int acc) -> bool {
        if (ctx.budget <= 0) return false;
        if (pos == support.size()) return try_assignment(acc);
        const OddCoord& o = odds[support[pos]];
        for (const Int& v : o.candidates) {
            if (ctx.budget-- <= 0) return false;
            chosen[support[pos]] = v;
            if (assign(pos + 1, acc + v * o.coeff)) return true;
        }
        return false;
    };

    std::function<bool(std::size_t, std::size_t)> pick_support =
        [&](std::size_t start, std::size_t remaining) -> bool {
        if (remaining == 0) return assign(0, Int(0));
        for (std::size_t i = start; i + remaining <= odds.size(); ++i) {
            if (odds[i].candidates.empty()) continue;
            support.push_back(i);
            if (pick_support(i + 1, remaining - 1)) return true;
            support.pop_back();
        }
        return false;
    };

    for (std::size_t size = 0; size <= odds.size(); ++size) {
        if (ctx.budget <= 0) break;
        support.clear();
        if (pick_support(0, size)) {
            SearchResult res;
            res.found = true;
            for (std::size_t i = 0; i < support.size(); ++i)
                res.entries.push_back({odds[support[i]].k, chosen[support[i]]});
            for (std::size_t i = 0; i < m; ++i)
                if (even_out[i] != 0) res.entries.push_back({ctx.evens[i].k, even_out[i]});
            std::sort(res.entries.begin(), res.entries.end(),
                      [](const EntryValue& a, const EntryValue& b) { return a.first < b.first; });
            return res;
        }
    }
    return {};
}

BuildOutcome attained(MapCertificate cert) {
    VerifyReport report = verify_map_certificate(cert);
    if (!report.ok())
        throw std::logic_error("internal: built certificate failed verification: " +
                               report.first_failure());
    BuildOutcome out;
    out.status = BuildOutcome::Status::Attained;
    out.cert = std::move(cert);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// equality

bool operator==(const ZeroCertificate& a, const ZeroCertificate& b) {
    return a.n == b.n && a.reps == b.reps && a.d == b.d && a.b == b.b && a.c == b.c && a.N == b.N;
}

bool operator==(const Justification& a, const Justification& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Justification::Kind::AntipodalJoin) return true;
    if (a.m != b.m) return false;
    if (!a.sub || !b.sub) return a.sub == b.sub;
    return *a.sub == *b.sub;
}

bool operator==(const LocalEntry& a, const LocalEntry& b) {
    return a.k == b.k && a.d == b.d && a.just == b.just;
}

bool operator==(const MapCertificate& a, const MapCertificate& b) {
    return a.n == b.n && a.degree == b.degree && a.entries == b.entries;
}

bool VerifyReport::ok() const {
    for (const CheckLine& line : checks)
        if (!line.passed) return false;
    return true;
}

std::string VerifyReport::first_failure() const {
    for (const CheckLine& line : checks)
        if (!line.passed) return line.name + (line.detail.empty() ? "" : ": " + line.detail);
    return "";
}

// ---------------------------------------------------------------------------

Int degree_from_entries(std::int64_t n, const std::vector<EntryValue>& entries) {
    if (n < 2) throw std::domain_error("degree_from_entries: n must be >= 2");
    std::set<std::int64_t> seen;
    Int sum = 0;
    for (const EntryValue& e : entries) {
        if (e.first < 1 || e.first > n - 1)
            throw std::domain_error("degree_from_entries: k out of range [1, n-1]");
        if (!seen.insert(e.first).second) throw std::domain_error("degree_from_entries: duplicate k");
        sum += e.second * numtheory::binomial(n, e.first);
    }
    return Int(1) - sum;
}

ZeroCertificate build_zero_certificate(std::int64_t n) {
    numtheory::NClassification cls = numtheory::classify(n);
    if (cls.kind != NKind::OddNonPrimePower && cls.kind != NKind::EvenAdmissible)
        throw std::domain_error(std::string("build_zero_certificate: n = ") + std::to_string(n) +
                                " is " + numtheory::kind_name(cls.kind) +
                                "; n must be neither a prime power nor twice a prime power");
    ZeroCertificate cert;
    cert.n = n;
    cert.reps = numtheory::prime_power_representations(n);
    std::vector<KTemplate> tmpl = zero_template(n, cert.reps);
    cert.c = canonical_c(n, tmpl);
    cert.N = canonical_N(n, tmpl);
    auto b = numtheory::solve_linear_diophantine(cert.c, cert.N);
    if (!b) throw std::logic_error("internal: gcd of constraint coefficients does not divide N");
    cert.b = std::move(*b);
    cert.d.assign(static_cast<std::size_t>(n - 1), Int(0));
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        const KTemplate& t = tmpl[static_cast<std::size_t>(k - 1)];
        const Int& bk = cert.b[static_cast<std::size_t>(k - 1)];
        switch (t.kase) {
            case KCase::TPower: cert.d[k - 1] = 0; break;
            case KCase::SPower:
            case KCase::OtherPrimePower: cert.d[k - 1] = 1 + t.q * bk; break;
            case KCase::Free: cert.d[k - 1] = bk; break;
        }
    }
    return cert;
}

VerifyReport check_zero_conditions(std::int64_t n, const std::vector<Int>& d) {
    if (n < 2) throw FormatError("check_zero_conditions: n must be >= 2");
    if (d.size() != static_cast<std::size_t>(n - 1))
        throw FormatError("check_zero_conditions: d must have length n-1");
    VerifyReport report;

    Int sum = 1;
    for (std::int64_t k = 1; k <= n - 1; ++k) sum -= d[k - 1] * numtheory::binomial(n, k);
    add_check(report, "sum_identity", sum == 0,
              sum == 0 ? "1 - sum d_k C(n,k) = 0" : "1 - sum d_k C(n,k) = " + to_string(sum));

    bool cong_ok = true;
    std::string cong_detail;
    for (std::int64_t q = 2; q <= n - 1; ++q) {
        if (!numtheory::is_prime(q)) continue;
        for (Int qa = q; qa <= n - 1; qa *= q) {
            std::int64_t k = to_i64(qa);
            const Int& v = d[static_cast<std::size_t>(k - 1)];
            if (v == 0 || pos_mod(v, q) == pos_mod(Int(1), q)) continue;
            cong_ok = false;
            if (cong_detail.empty())
                cong_detail = "d_" + std::to_string(k) + " = " + to_string(v) +
                              " is neither 0 nor 1 (mod " + std::to_string(q) + ")";
        }
    }
    add_check(report, "prime_power_congruence", cong_ok, cong_detail);

    bool d1_ok = true;
    std::string d1_detail = "n-1 is not a prime power; nothing to check";
    if (n - 1 >= 2) {
        numtheory::PrimeFactorization f = numtheory::factorize(n - 1);
        if (f.size() == 1) {
            std::int64_t p = f[0].prime;
            d1_ok = pos_mod(d[0], p) == pos_mod(Int(1), p);
            d1_detail = d1_ok ? "d_1 = 1 (mod " + std::to_string(p) + ")"
                              : "d_1 = " + to_string(d[0]) + " but n = " + std::to_string(p) + "^t + 1 requires d_1 = 1 (mod " + std::to_string(p) + ")";
        }
    }
    add_check(report, "d1_congruence", d1_ok, d1_detail);
    return report;
}

VerifyReport verify_zero_certificate(const ZeroCertificate& cert) {
    if (cert.n < 2) throw FormatError("zero certificate: n must be >= 2");
    const auto len = static_cast<std::size_t>(cert.n - 1);
    if (cert.d.size() != len || cert.b.size() != len || cert.c.size() != len)
        throw FormatError("zero certificate: d, b, c must all have length n-1");

    VerifyReport report;

    bool reps_ok = true;
    std::string reps_detail;
    for (std::size_t i = 0; i < cert.reps.size(); ++i) {
        const PrimePowerRep& r = cert.reps[i];
        if (!numtheory::is_prime(r.p) || r.s < 0 || r.s >= r.t ||
            ipow(r.p, r.s) + ipow(r.p, r.t) != cert.n ||
            (i > 0 && cert.reps[i - 1].p >= r.p)) {
            reps_ok = false;
            reps_detail = "representation (p=" + std::to_string(r.p) + ", s=" + std::to_string(r.s) +
                          ", t=" + std::to_string(r.t) + ") is invalid";
            break;
        }
    }
    add_check(report, "reps_valid", reps_ok, reps_detail);

    bool exhaustive = cert.reps == numtheory::prime_power_representations(cert.n);
    add_check(report, "reps_exhaustive", exhaustive,
              exhaustive ? "" : "stated representations differ from the full list");

    VerifyReport conds = check_zero_conditions(cert.n, cert.d);
    report.checks.insert(report.checks.end(), conds.checks.begin(), conds.checks.end());

    std::vector<KTemplate> tmpl = zero_template(cert.n, cert.reps);
    std::vector<Int> c_expected = canonical_c(cert.n, tmpl);
    bool c_ok = cert.c == c_expected;
    std::string c_detail;
    if (!c_ok)
        for (std::size_t i = 0; i < len; ++i)
            if (cert.c[i] != c_expected[i]) {
                c_detail = "c_" + std::to_string(i + 1) + " = " + to_string(cert.c[i]) +
                           ", canonical value is " + to_string(c_expected[i]);
                break;
            }
    add_check(report, "c_canonical", c_ok, c_detail);

    Int N_expected = canonical_N(cert.n, tmpl);
    add_check(report, "N_canonical", cert.N == N_expected,
              cert.N == N_expected ? "" : "N = " + to_string(cert.N) + ", canonical value is " + to_string(N_expected));

    Int prime_product = 1;
    for (const PrimePowerRep& r : cert.reps) prime_product *= r.p;
    bool div_ok = mpz_divisible_p(cert.N.get_mpz_t(), prime_product.get_mpz_t()) != 0;
    add_check(report, "N_divisible_by_rep_primes", div_ok,
              div_ok ? "" : "N = " + to_string(cert.N) + " is not divisible by " + to_string(prime_product));

    Int g = 0;
    for (const Int& ci : cert.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
    bool g_ok = g == 0 ? cert.N == 0 : mpz_divisible_p(cert.N.get_mpz_t(), g.get_mpz_t()) != 0;
    add_check(report, "gcd_c_divides_N", g_ok,
              g_ok ? "gcd of nonzero c = " + to_string(g) : "gcd " + to_string(g) + " does not divide N = " + to_string(cert.N));

    Int bc = 0;
    for (std::size_t i = 0; i < len; ++i) bc += cert.b[i] * cert.c[i];
    add_check(report, "b_solves_N", bc == cert.N,
              bc == cert.N ? "" : "sum b_k c_k = " + to_string(bc) + ", expected N = " + to_string(cert.N));

    return report;
}

std::optional<MapCertificate> certificate_from_entries(std::int64_t n,
                                                       const std::vector<EntryValue>& entries) {
    std::vector<EntryValue> nonzero;
    for (const EntryValue& e : entries)
        if (e.second != 0) nonzero.push_back(e);
    MapCertificate cert;
    cert.n = n;
    cert.degree = degree_from_entries(n, nonzero);
    std::sort(nonzero.begin(), nonzero.end(),
              [](const EntryValue& a, const EntryValue& b) { return a.first < b.first; });
    for (const EntryValue& e : nonzero) {
        auto just = justify_local(n, e.first, e.second);
        if (!just) return std::nullopt;
        LocalEntry le;
        le.k = e.first;
        le.d = e.second;
        le.just = std::move(*just);
        cert.entries.push_back(std::move(le));
    }
    return cert;
}

BuildOutcome build_map_certificate(std::int64_t n, const Int& d, std::int64_t search_bound) {
    if (n < 3) throw std::domain_error("build_map_certificate: n must be >= 3");
    if (search_bound < 1) throw std::domain_error("build_map_certificate: search bound must be positive");

    degrees::DegreeConstraint constraint = degrees::necessary_constraint(n);
    if (!constraint.satisfies(d)) {
        BuildOutcome out;
        out.status = BuildOutcome::Status::Impossible;
        out.constraint = constraint;
        return out;
    }

    if (d == 1) {
        MapCertificate cert;
        cert.n = n;
        cert.degree = 1;
        return attained(std::move(cert));
    }

    if (n % 2 == 1) {
        auto cert = build_odd(n, d);
        if (!cert)
            throw std::logic_error("internal: odd-n construction failed for a degree satisfying the constraint");
        return attained(std::move(*cert));
    }

    if (numtheory::classify(n).kind == NKind::EvenAdmissible && d == 0) {
        ZeroCertificate zc = build_zero_certificate(n);
        std::vector<EntryValue> entries;
        for (std::int64_t k = 1; k <= n - 1; ++k)
            if (zc.d[k - 1] != 0) entries.push_back({k, zc.d[k - 1]});
        auto cert = certificate_from_entries(n, entries);
        if (!cert || cert->degree != 0)
            throw std::logic_error("internal: zero-certificate conversion failed");
        return attained(std::move(*cert));
    }

    SearchResult found = bounded_search(n, d, search_bound);
    if (found.found) {
        auto cert = certificate_from_entries(n, found.entries);
        if (!cert || cert->degree != d)
            throw std::logic_error("internal: search produced an unjustifiable vector");
        return attained(std::move(*cert));
    }
    BuildOutcome out;
    out.status = BuildOutcome::Status::Unknown;
    out.searched_bound = search_bound;
    return out;
}

namespace {

void verify_map_impl(const MapCertificate& cert, std::int64_t depth, std::int64_t max_depth,
                     const std::string& prefix, VerifyReport& report) {
    bool structure_ok = cert.n >= 2;
    std::string structure_detail = structure_ok ? "" : "n must be >= 2";
    std::set<std::int64_t> seen;
    for (const LocalEntry& e : cert.entries) {
        if (e.k < 1 || e.k > cert.n - 1) {
            structure_ok = false;
            structure_detail = "entry k=" + std::to_string(e.k) + " out of range [1, n-1]";
            break;
        }
        if (!seen.insert(e.k).second) {
            structure_ok = false;
            structure_detail = "duplicate entry for k=" + std::to_string(e.k);
            break;
        }
        if (e.d == 0) {
            structure_ok = false;
            structure_detail = "entry k=" + std::to_string(e.k) + " has d = 0; zero entries must be omitted";
            break;
        }
    }
    add_check(report, prefix + "structure", structure_ok, structure_detail);
    if (!structure_ok) return;

    Int sum = 1;
    for (const LocalEntry& e : cert.entries) sum -= e.d * numtheory::binomial(cert.n, e.k);
    bool degree_ok = sum == cert.degree;
    add_check(report, prefix + "degree_identity", degree_ok,
              degree_ok ? "" : "1 - sum d_k C(n,k) = " + to_string(sum) + ", declared degree is " + to_string(cert.degree));

    for (const LocalEntry& e : cert.entries) {
        std::string name = prefix + "entry k=" + std::to_string(e.k);
        if (e.just.kind == Justification::Kind::AntipodalJoin) {
            bool ok = e.k % 2 == 0 || (cert.n - e.k) % 2 == 0;
            add_check(report, name, ok,
                      ok ? "antipodal join"
                         : "antipodal join illegal: k = " + std::to_string(e.k) + " and n-k = " +
                               std::to_string(cert.n - e.k) + " are both odd");
            continue;
        }
        std::int64_t m = e.just.m;
        if (m != e.k && m != cert.n - e.k) {
            add_check(report, name, false,
                      "factor m=" + std::to_string(m) + " is neither k nor n-k");
            continue;
        }
        if (m < 2) {
            add_check(report, name, false, "factor m=" + std::to_string(m) + " must be >= 2");
            continue;
        }
        if (!e.just.sub) {
            add_check(report, name, false, "factor justification missing sub-certificate");
            continue;
        }
        if (e.just.sub->n != m) {
            add_check(report, name, false,
                      "sub-certificate is for n=" + std::to_string(e.just.sub->n) + ", expected m=" + std::to_string(m));
            continue;
        }
        if (e.just.sub->degree != e.d) {
            add_check(report, name, false,
                      "sub-certificate proves degree " + to_string(e.just.sub->degree) + ", entry requires " + to_string(e.d));
            continue;
        }
        if (m == 2 && e.d != 1) {
            add_check(report, name, false, "factor m=2 admits only degree 1");
            continue;
        }
        if (m >= 2 && m % 2 == 1) {
            numtheory::PrimeFactorization f = numtheory::factorize(m);
            if (f.size() == 1) {
                std::int64_t q = f[0].prime;
                if (pos_mod(e.d, q) != pos_mod(Int(1), q)) {
                    add_check(report, name, false,
                              "factor m=" + std::to_string(m) + " is a power of " + std::to_string(q) +
                                  " but d = " + to_string(e.d) + " is not 1 (mod " + std::to_string(q) + ")");
                    continue;
                }
            }
        }
        if (depth + 1 > max_depth) {
            add_check(report, name, false, "factor recursion exceeds the depth bound");
            continue;
        }
        VerifyReport sub_report;
        verify_map_impl(*e.just.sub, depth + 1, max_depth, name + " / ", sub_report);
        if (sub_report.ok()) {
            add_check(report, name, true, "factor m=" + std::to_string(m));
        } else {
            add_check(report, name, false, "sub-certificate invalid: " + sub_report.first_failure());
        }
    }
}

}  // namespace

VerifyReport verify_map_certificate(const MapCertificate& cert) {
    VerifyReport report;
    std::int64_t max_depth = cert.n >= 2 ? floor_log2(cert.n) + 1 : 1;
    verify_map_impl(cert, 0, max_depth, "", report);
    return report;
}

}  // namespace eqdeg::certificates
