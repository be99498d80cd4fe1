#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "eqdeg/certificates.hpp"
#include "eqdeg/degrees.hpp"
#include "eqdeg/errors.hpp"
#include "eqdeg/numtheory.hpp"
#include "eqdeg/oracle.hpp"
#include "eqdeg/orbits.hpp"
#include "eqdeg/serialize.hpp"

namespace {

using namespace eqdeg;

constexpr int kOk = 0;
constexpr int kFailed = 1;      // verification failed or degree impossible
constexpr int kUnknown = 2;     // bounded search exhausted
constexpr int kUsageError = 3;  // usage, domain or format error

std::string format_partition(const orbits::PartitionType& partition) {
    std::string s = "(";
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(partition[i]);
    }
    return s + ")";
}

std::string classification_line(std::int64_t n) {
    numtheory::NClassification cls = numtheory::classify(n);
    std::string line = numtheory::kind_name(cls.kind);
    if (cls.kind == numtheory::NKind::PrimePower || cls.kind == numtheory::NKind::TwicePrimePower)
        line += " p=" + std::to_string(cls.p) + " k=" + std::to_string(cls.k);
    degrees::DegreeConstraint constraint = degrees::necessary_constraint(n);
    if (constraint.unconstrained())
        line += "; degree unconstrained";
    else
        line += "; degrees " + constraint.describe();
    return line;
}

void print_report(const certificates::VerifyReport& report) {
    for (const auto& line : report.checks) {
        std::cout << "check " << line.name << ": " << (line.passed ? "pass" : "FAIL");
        if (!line.detail.empty()) std::cout << " (" << line.detail << ")";
        std::cout << "\n";
    }
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

int cmd_classify(std::int64_t n) {
    std::cout << "n = " << n << ": " << classification_line(n) << "\n";
    return kOk;
}

int cmd_constraint(std::int64_t n) {
    std::cout << "necessary: " << degrees::necessary_constraint(n).describe() << "\n";
    std::cout << "attainable: " << degrees::known_attainable(n).describe() << "\n";
    return kOk;
}

int cmd_orbits(std::int64_t n, std::int64_t p) {
    auto table = orbits::orbit_divisibility_table(n, p);
    std::cout << "orbit types of " << n << " with >= 2 blocks, sizes mod " << p << ":\n";
    for (const auto& row : table) {
        std::cout << format_partition(row.partition) << " size "
                  << to_string(orbits::orbit_size(n, row.partition)) << " residue " << row.residue
                  << "\n";
    }
    auto exceptional = orbits::exceptional_orbits(n, p);
    if (exceptional.empty()) {
        std::cout << "no exceptional orbits\n";
    } else {
        for (const auto& partition : exceptional)
            std::cout << "exceptional: " << format_partition(partition) << " size "
                      << to_string(orbits::orbit_size(n, partition)) << "\n";
    }
    return kOk;
}

int cmd_zero_cert(std::int64_t n, const std::string& out_path) {
    certificates::ZeroCertificate cert = certificates::build_zero_certificate(n);
    std::cout << "n = " << n << ": " << classification_line(n) << "\n";
    if (cert.reps.empty()) {
        std::cout << "representations: none\n";
    } else {
        std::cout << "representations:";
        for (const auto& r : cert.reps)
            std::cout << " " << r.p << "^" << r.s << "+" << r.p << "^" << r.t;
        std::cout << "\n";
    }
    std::cout << "N = " << to_string(cert.N) << "\n";
    Int g = 0;
    for (const Int& ci : cert.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
    std::cout << "gcd of nonzero c = " << to_string(g) << "\n";
    certificates::VerifyReport report = certificates::verify_zero_certificate(cert);
    print_report(report);
    if (!report.ok()) return kFailed;
    if (!out_path.empty()) {
        if (!write_file(out_path, certjson::to_text(certjson::CertificateDocument(cert)))) {
            std::cout << "error: cannot write " << out_path << "\n";
            return kUsageError;
        }
        std::cout << "wrote " << out_path << "\n";
    }
    return kOk;
}

std::string justification_text(const certificates::LocalEntry& e) {
    if (e.just.kind == certificates::Justification::Kind::AntipodalJoin) return "antipodal";
    return "factor m=" + std::to_string(e.just.m);
}

int cmd_map_cert(std::int64_t n, const std::string& degree_text, std::int64_t search_bound,
                 const std::string& out_path) {
    Int d;
    try {
        d = Int(degree_text);
    } catch (const std::invalid_argument&) {
        std::cout << "error: degree must be an integer, got '" << degree_text << "'\n";
        return kUsageError;
    }
    certificates::BuildOutcome outcome = certificates::build_map_certificate(n, d, search_bound);
    switch (outcome.status) {
        case certificates::BuildOutcome::Status::Impossible:
            std::cout << "Impossible: degree must satisfy " << outcome.constraint->describe()
                      << "\n";
            return kFailed;
        case certificates::BuildOutcome::Status::Unknown:
            std::cout << "Unknown: search exhausted with |d_k| <= " << outcome.searched_bound
                      << "\n";
            return kUnknown;
        case certificates::BuildOutcome::Status::Attained: break;
    }
    const certificates::MapCertificate& cert = *outcome.cert;
    std::cout << "Attained: degree " << to_string(cert.degree) << " on n = " << n << " with "
              << cert.entries.size() << " entries\n";
    for (const auto& e : cert.entries)
        std::cout << "(k=" << e.k << ", d=" << to_string(e.d) << ", " << justification_text(e)
                  << ")\n";
    std::cout << "certificate verified\n";
    if (!out_path.empty()) {
        if (!write_file(out_path, certjson::to_text(certjson::CertificateDocument(cert)))) {
            std::cout << "error: cannot write " << out_path << "\n";
            return kUsageError;
        }
        std::cout << "wrote " << out_path << "\n";
    }
    return kOk;
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cout << "error: cannot read " << path << "\n";
        return kUsageError;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    certjson::CertificateDocument doc = certjson::parse_certificate_text(buffer.str());
    certificates::VerifyReport report = std::visit(
        [](const auto& cert) {
            using T = std::decay_t<decltype(cert)>;
            if constexpr (std::is_same_v<T, certificates::ZeroCertificate>)
                return certificates::verify_zero_certificate(cert);
            else
                return certificates::verify_map_certificate(cert);
        },
        doc);
    print_report(report);
    std::cout << (report.ok() ? "certificate VALID" : "certificate INVALID") << "\n";
    return report.ok() ? kOk : kFailed;
}

int cmd_selftest(std::int64_t nmax) {
    bool all_ok = true;
    auto show = [&](const oracle::CheckReport& report) {
        std::cout << "check " << report.name << " [" << report.range << "]: "
                  << (report.passed() ? "PASS" : "FAIL");
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.2f s)", report.elapsed_seconds);
        std::cout << buf << "\n";
        for (std::size_t i = 0; i < report.counterexamples.size() && i < 5; ++i)
            std::cout << "  counterexample: " << report.counterexamples[i] << "\n";
        all_ok = all_ok && report.passed();
    };
    show(oracle::brute_gcd_check(nmax));
    show(oracle::brute_lucas_check(std::min<std::int64_t>(nmax, 200), {2, 3, 5, 7, 11}));

    {
        oracle::CheckReport report;
        report.name = "zero_search_independent";
        report.range = "n=12, bound 40";
        auto found = oracle::exhaustive_zero_search(12, 40);
        if (!found) {
            report.counterexamples.push_back("no vector found");
        } else {
            std::vector<Int> d;
            for (std::int64_t v : *found) d.emplace_back(static_cast<long>(v));
            if (!certificates::check_zero_conditions(12, d).ok())
                report.counterexamples.push_back("found vector fails the side conditions");
        }
        show(report);
    }
    {
        oracle::CheckReport report;
        report.name = "degree_search_independent";
        report.range = "n=6, d=-1, bound 10";
        auto found = oracle::exhaustive_degree_search(6, Int(-1), 10);
        if (!found) {
            report.counterexamples.push_back("no entry vector found");
        } else {
            std::vector<certificates::EntryValue> entries;
            for (const auto& [k, v] : *found) entries.push_back({k, Int(static_cast<long>(v))});
            auto cert = certificates::certificate_from_entries(6, entries);
            if (!cert || cert->degree != -1 || !certificates::verify_map_certificate(*cert).ok())
                report.counterexamples.push_back("found vector does not yield a valid certificate");
        }
        show(report);
    }
    std::cout << (all_ok ? "selftest PASS" : "selftest FAIL") << "\n";
    return all_ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-integer classification and certification of equivariant self-map degrees "
                 "of the simplex boundary"};
    app.require_subcommand(1);

    std::int64_t n = 0;
    std::int64_t prime = 0;
    std::int64_t nmax = 300;
    std::int64_t search_bound = 40;
    std::string degree_text;
    std::string out_path;
    std::string file_path;

    CLI::App* classify = app.add_subcommand("classify", "classify n and print the degree constraint");
    classify->add_option("n", n, "number of permuted points")->required();

    CLI::App* constraint = app.add_subcommand("constraint", "print necessary and known-attainable degree sets");
    constraint->add_option("n", n)->required();

    CLI::App* orbits_cmd = app.add_subcommand("orbits", "orbit-size divisibility table");
    orbits_cmd->add_option("n", n)->required();
    orbits_cmd->add_option("--prime", prime, "prime modulus")->required();

    CLI::App* zero = app.add_subcommand("zero-cert", "build and verify a zero-degree certificate");
    zero->add_option("n", n)->required();
    zero->add_option("--out", out_path, "write the certificate as JSON");

    CLI::App* map = app.add_subcommand("map-cert", "certify that a degree is attainable");
    map->add_option("n", n)->required();
    map->add_option("d", degree_text, "target degree")->required();
    map->add_option("--search-bound", search_bound, "bound on |d_k| in the search (default 40)");
    map->add_option("--out", out_path, "write the certificate as JSON");

    CLI::App* verify = app.add_subcommand("verify", "verify a certificate document");
    verify->add_option("file", file_path, "JSON certificate")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the independent oracle checks");
    selftest->add_option("--nmax", nmax, "range for the brute-force checks (default 300)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (classify->parsed()) return cmd_classify(n);
        if (constraint->parsed()) return cmd_constraint(n);
        if (orbits_cmd->parsed()) return cmd_orbits(n, prime);
        if (zero->parsed()) return cmd_zero_cert(n, out_path);
        if (map->parsed()) return cmd_map_cert(n, degree_text, search_bound, out_path);
        if (verify->parsed()) return cmd_verify(file_path);
        if (selftest->parsed()) return cmd_selftest(nmax);
    } catch (const FormatError& e) {
        std::cout << "format error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        std::cout << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
