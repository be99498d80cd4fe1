#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eqdeg/degrees.hpp"
#include "eqdeg/ints.hpp"
#include "eqdeg/numtheory.hpp"

namespace eqdeg::certificates {

// Witness that 0 = 1 - sum d_k C(n,k) with the congruence side conditions
// that make every nonzero d_k locally realizable. The b, c vectors and N
// document the canonical construction: d is the case template with b
// substituted in, c are the constraint coefficients, and N is the value the
// b_k must hit (sum b_k c_k = N).
struct ZeroCertificate {
    std::int64_t n = 0;
    std::vector<numtheory::PrimePowerRep> reps;
    std::vector<Int> d, b, c;  // index i holds the value for k = i+1
    Int N;
};
bool operator==(const ZeroCertificate& a, const ZeroCertificate& b);

struct MapCertificate;

// Why a local degree d_k is attainable: either one join factor is
// even-dimensional (antipodal map), or a factor on m points attains d_k,
// witnessed by a nested certificate.
struct Justification {
    enum class Kind { AntipodalJoin, FactorRecursion };
    Kind kind = Kind::AntipodalJoin;
    std::int64_t m = 0;                         // FactorRecursion: m in {k, n-k}
    std::shared_ptr<const MapCertificate> sub;  // FactorRecursion: proves degree d_k on m points
};
bool operator==(const Justification& a, const Justification& b);

struct LocalEntry {
    std::int64_t k = 0;
    Int d;  // nonzero; zero entries are omitted entirely
    Justification just;
};
bool operator==(const LocalEntry& a, const LocalEntry& b);

// Recursive proof object: degree = 1 - sum d_k C(n,k) over the entries,
// every justification legal.
struct MapCertificate {
    std::int64_t n = 0;
    Int degree;
    std::vector<LocalEntry> entries;
};
bool operator==(const MapCertificate& a, const MapCertificate& b);

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckLine> checks;
    bool ok() const;
    std::string first_failure() const;  // empty when ok()
};

struct BuildOutcome {
    enum class Status { Attained, Impossible, Unknown };
    Status status = Status::Unknown;
    std::optional<MapCertificate> cert;                  // Attained
    std::optional<degrees::DegreeConstraint> constraint;  // Impossible
    std::int64_t searched_bound = 0;                     // Unknown
};

using EntryValue = std::pair<std::int64_t, Int>;  // (k, d_k)

// 1 - sum d_k C(n,k); the k must be distinct and lie in [1, n-1].
Int degree_from_entries(std::int64_t n, const std::vector<EntryValue>& entries);

// Canonical construction for n neither a prime power nor twice a prime
// power; throws std::domain_error naming the classification otherwise.
ZeroCertificate build_zero_certificate(std::int64_t n);

// The three side conditions on a bare d vector: the sum identity, the
// prime-power congruences, and the d_1 congruence when n - 1 is a prime
// power. Usable on vectors found independently of the builder.
VerifyReport check_zero_conditions(std::int64_t n, const std::vector<Int>& d);

// Full re-check of a (possibly untrusted) certificate: the three side
// conditions plus consistency of reps, c, N, and b. Throws FormatError when
// the vectors do not have length n-1.
VerifyReport verify_zero_certificate(const ZeroCertificate& cert);

// Assigns a legal justification to every entry, or nullopt if some entry
// admits none; the declared degree is computed from the entries.
std::optional<MapCertificate> certificate_from_entries(std::int64_t n,
                                                       const std::vector<EntryValue>& entries);

// Tri-state: Impossible when d violates the necessary constraint, Attained
// with a verified certificate when one of the constructive routes or the
// bounded search (|d_k| <= search_bound) succeeds, Unknown otherwise.
BuildOutcome build_map_certificate(std::int64_t n, const Int& d, std::int64_t search_bound);

VerifyReport verify_map_certificate(const MapCertificate& cert);

}  // namespace eqdeg::certificates
