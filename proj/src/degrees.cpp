#include "eqdeg/degrees.hpp"

#include <algorithm>
#include <stdexcept>

#include "eqdeg/numtheory.hpp"

namespace eqdeg::degrees {

using numtheory::NKind;

bool DegreeConstraint::satisfies(const Int& d) const {
    if (unconstrained()) return true;
    return residues.count(pos_mod(d, modulus)) > 0;
}

std::string DegreeConstraint::describe() const {
    if (unconstrained()) return "unconstrained";
    if (residues.size() == 2 && residues.count(1) && residues.count(modulus - 1) && modulus > 2)
        return "d ≡ ±1 (mod " + std::to_string(modulus) + ")";
    std::string s = "d ≡ ";
    bool first = true;
    for (std::int64_t r : residues) {
        if (!first) s += ", ";
        s += std::to_string(r);
        first = false;
    }
    s += " (mod " + std::to_string(modulus) + ")";
    return s;
}

bool KnownDegreeSet::contains(const Int& d) const {
    if (all) return true;
    for (const Coset& c : cosets)
        if (pos_mod(d, c.modulus) == c.residue) return true;
    for (const Int& m : members)
        if (m == d) return true;
    return false;
}

std::vector<Int> KnownDegreeSet::values_within(std::int64_t bound) const {
    if (bound < 0) throw std::domain_error("values_within: bound must be >= 0");
    std::vector<Int> vals;
    if (all) {
        vals.reserve(static_cast<std::size_t>(2 * bound + 1));
        for (std::int64_t v = -bound; v <= bound; ++v) vals.emplace_back(static_cast<long>(v));
    } else {
        for (const Coset& c : cosets) {
            // Smallest value >= -bound congruent to residue.
            Int lo = Int(static_cast<long>(-bound));
            Int shift = Int(static_cast<long>(c.residue)) - lo;
            Int start = lo + pos_mod(shift, c.modulus);
            for (Int v = start; v <= bound; v += c.modulus) vals.push_back(v);
        }
        for (const Int& m : members) {
            Int a = abs(m);
            if (a <= bound) vals.push_back(m);
        }
    }
    std::sort(vals.begin(), vals.end(), abs_less);
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::string KnownDegreeSet::describe() const {
    std::string s;
    if (all) {
        s = "all integers";
    } else {
        bool first = true;
        for (const Int& m : members) {
            s += (first ? "{" : ", ") + to_string(m);
            first = false;
        }
        if (!first) s += "}";
        for (const Coset& c : cosets) {
            if (!s.empty()) s += " ∪ ";
            s += "{d ≡ " + std::to_string(c.residue) + " (mod " + std::to_string(c.modulus) + ")}";
        }
        if (s.empty()) s = "{}";
    }
    s += exact ? " (exact)" : " (lower bound)";
    return s;
}

KnownDegreeSet all_degrees() {
    KnownDegreeSet s;
    s.all = true;
    s.exact = true;
    return s;
}

Int gcd_binomials(std::int64_t n) {
    if (n < 2) throw std::domain_error("gcd_binomials: n must be >= 2");
    Int g = 0;
    for (std::int64_t k = 1; k <= n - 1; ++k) {
        Int c = numtheory::binomial(n, k);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

DegreeConstraint necessary_constraint(std::int64_t n) {
    numtheory::NClassification cls = numtheory::classify(n);
    DegreeConstraint out;
    switch (cls.kind) {
        case NKind::PrimePower:
            out.modulus = cls.p;
            out.residues = {1 % cls.p};
            break;
        case NKind::TwicePrimePower:
            out.modulus = cls.p;
            out.residues = {1, cls.p - 1};
            break;
        default:
            break;
    }
    return out;
}

KnownDegreeSet known_attainable(std::int64_t n) {
    numtheory::NClassification cls = numtheory::classify(n);
    KnownDegreeSet out;
    switch (cls.kind) {
        case NKind::OddNonPrimePower:
            return all_degrees();
        case NKind::PrimePower:
            if (n == 2) {
                out.members = {Int(-1), Int(1)};
                out.exact = true;
            } else if (cls.p == 2) {
                out.members = {Int(1)};
                out.exact = false;
            } else {
                out.cosets = {{cls.p, 1}};
                out.exact = true;
            }
            return out;
        case NKind::TwicePrimePower:
            out.members = {Int(1)};
            out.exact = false;
            return out;
        case NKind::EvenAdmissible:
            out.members = {Int(0), Int(1)};
            out.exact = false;
            return out;
    }
    return out;
}

Int join_degree(const std::vector<Int>& ds, const std::vector<int>& eps) {
    if (ds.empty()) throw std::domain_error("join_degree: need at least one factor degree");
    if (eps.size() != ds.size() + 1) throw std::domain_error("join_degree: eps must have length ds.size()+1");
    for (int e : eps)
        if (e != 0 && e != 1) throw std::domain_error("join_degree: eps entries must be 0 or 1");
    const std::size_t l = ds.size();
    Int r = 1;
    r += eps[0] * (ds[0] - 1);
    for (std::size_t i = 1; i < l; ++i) r += eps[i] * (ds[i] - ds[i - 1]);
    r -= eps[l] * ds[l - 1];
    return r;
}

IncrementChain increment_chain(const Int& target) {
    // Start from the identity chain (degree 1) and append one +-1 step per
    // unit of distance; appending d with a flipped trailing eps changes the
    // total by (eps_old - eps_new) * d.
    IncrementChain chain;
    chain.ds = {Int(1)};
    chain.eps = {0, 0};
    Int current = 1;
    while (current != target) {
        int step = target > current ? 1 : -1;
        int eps_old = chain.eps.back();
        int eps_new = 1 - eps_old;
        int d = (eps_old - eps_new) == 1 ? step : -step;
        chain.ds.emplace_back(static_cast<long>(d));
        chain.eps.push_back(eps_new);
        current += step;
    }
    return chain;
}

KnownDegreeSet admissible_local_degrees(std::int64_t n, std::int64_t k) {
    if (n < 2) throw std::domain_error("admissible_local_degrees: n must be >= 2");
    if (k < 1 || k > n - 1) throw std::domain_error("admissible_local_degrees: k must lie in [1, n-1]");
    if (k % 2 == 0 || (n - k) % 2 == 0) return all_degrees();
    KnownDegreeSet out;
    out.members = {Int(0), Int(1)};
    out.exact = false;
    for (std::int64_t m : {k, n - k}) {
        if (m < 2) continue;  // the empty factor contributes nothing
        KnownDegreeSet factor = known_attainable(m);
        if (factor.all) return all_degrees();
        out.cosets.insert(out.cosets.end(), factor.cosets.begin(), factor.cosets.end());
        out.members.insert(out.members.end(), factor.members.begin(), factor.members.end());
    }
    std::sort(out.members.begin(), out.members.end(), abs_less);
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

}  // namespace eqdeg::degrees
