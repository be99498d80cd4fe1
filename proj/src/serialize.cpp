#include "eqdeg/serialize.hpp"

#include <cctype>

namespace eqdeg::certjson {

using certificates::Justification;
using certificates::LocalEntry;
using certificates::MapCertificate;
using certificates::ZeroCertificate;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void require_fields(const json& j, const char* what, std::initializer_list<const char*> fields) {
    if (!j.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
    for (const char* f : fields)
        if (!j.contains(f)) throw FormatError(std::string(what) + ": missing field '" + f + "'");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* f : fields)
            if (item.key() == f) known = true;
        if (!known) throw FormatError(std::string(what) + ": unknown field '" + item.key() + "'");
    }
}

std::int64_t parse_i64(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw FormatError(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

Int parse_bigint(const json& j, const char* what) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start) throw FormatError(std::string(what) + ": empty integer string");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw FormatError(std::string(what) + ": malformed integer string '" + s + "'");
        return Int(s);
    }
    throw FormatError(std::string(what) + ": expected an integer or a decimal string");
}

std::vector<Int> parse_bigint_vector(const json& j, std::size_t expected, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array");
    if (j.size() != expected)
        throw FormatError(std::string(what) + ": expected " + std::to_string(expected) +
                          " entries, found " + std::to_string(j.size()));
    std::vector<Int> out;
    out.reserve(expected);
    for (const json& e : j) out.push_back(parse_bigint(e, what));
    return out;
}

std::string big_str(const Int& v) { return to_string(v); }

// Untrusted documents could nest factor recursions arbitrarily deep; the
// verifier enforces its own logarithmic bound, but the parser must not blow
// the stack before the verifier ever runs.
constexpr int kMaxParseDepth = 64;

MapCertificate parse_map_certificate(const json& j, int depth);

Justification parse_justification(const json& j, int depth) {
    if (!j.is_object() || !j.contains("kind"))
        throw FormatError("justification: expected an object with a 'kind' field");
    if (!j.at("kind").is_string()) throw FormatError("justification: 'kind' must be a string");
    std::string kind = j.at("kind").get<std::string>();
    Justification out;
    if (kind == "antipodal") {
        require_fields(j, "justification", {"kind"});
        out.kind = Justification::Kind::AntipodalJoin;
        return out;
    }
    if (kind == "factor") {
        require_fields(j, "justification", {"kind", "m", "sub"});
        out.kind = Justification::Kind::FactorRecursion;
        out.m = parse_i64(j.at("m"), "justification m");
        out.sub = std::make_shared<const MapCertificate>(parse_map_certificate(j.at("sub"), depth + 1));
        return out;
    }
    throw FormatError("justification: unknown kind '" + kind + "'");
}

MapCertificate parse_map_certificate(const json& j, int depth) {
    if (depth > kMaxParseDepth)
        throw FormatError("map certificate: factor recursion nested too deeply");
    require_fields(j, "map certificate", {"type", "n", "degree", "entries"});
    if (!j.at("type").is_string() || j.at("type").get<std::string>() != "map_certificate")
        throw FormatError("map certificate: type must be 'map_certificate'");
    MapCertificate cert;
    cert.n = parse_i64(j.at("n"), "map certificate n");
    if (cert.n < 2) throw FormatError("map certificate: n must be >= 2");
    cert.degree = parse_bigint(j.at("degree"), "map certificate degree");
    const json& entries = j.at("entries");
    if (!entries.is_array()) throw FormatError("map certificate: entries must be an array");
    for (const json& e : entries) {
        require_fields(e, "entry", {"k", "d", "just"});
        LocalEntry le;
        le.k = parse_i64(e.at("k"), "entry k");
        le.d = parse_bigint(e.at("d"), "entry d");
        le.just = parse_justification(e.at("just"), depth);
        cert.entries.push_back(std::move(le));
    }
    return cert;
}

ZeroCertificate parse_zero_certificate(const json& j) {
    require_fields(j, "zero certificate", {"type", "n", "reps", "d", "b", "c", "N"});
    if (!j.at("type").is_string() || j.at("type").get<std::string>() != "zero_certificate")
        throw FormatError("zero certificate: type must be 'zero_certificate'");
    ZeroCertificate cert;
    cert.n = parse_i64(j.at("n"), "zero certificate n");
    if (cert.n < 2) throw FormatError("zero certificate: n must be >= 2");
    const json& reps = j.at("reps");
    if (!reps.is_array()) throw FormatError("zero certificate: reps must be an array");
    for (const json& r : reps) {
        require_fields(r, "representation", {"p", "s", "t"});
        cert.reps.push_back({parse_i64(r.at("p"), "representation p"),
                             parse_i64(r.at("s"), "representation s"),
                             parse_i64(r.at("t"), "representation t")});
    }
    const auto len = static_cast<std::size_t>(cert.n - 1);
    cert.d = parse_bigint_vector(j.at("d"), len, "zero certificate d");
    cert.b = parse_bigint_vector(j.at("b"), len, "zero certificate b");
    cert.c = parse_bigint_vector(j.at("c"), len, "zero certificate c");
    cert.N = parse_bigint(j.at("N"), "zero certificate N");
    return cert;
}

}  // namespace

ordered_json to_json(const ZeroCertificate& cert) {
    ordered_json j;
    j["type"] = "zero_certificate";
    j["n"] = cert.n;
    ordered_json reps = ordered_json::array();
    for (const auto& r : cert.reps) reps.push_back({{"p", r.p}, {"s", r.s}, {"t", r.t}});
    j["reps"] = std::move(reps);
    auto vec = [](const std::vector<Int>& v) {
        ordered_json arr = ordered_json::array();
        for (const Int& x : v) arr.push_back(big_str(x));
        return arr;
    };
    j["d"] = vec(cert.d);
    j["b"] = vec(cert.b);
    j["c"] = vec(cert.c);
    j["N"] = big_str(cert.N);
    return j;
}

ordered_json to_json(const MapCertificate& cert) {
    ordered_json j;
    j["type"] = "map_certificate";
    j["n"] = cert.n;
    j["degree"] = big_str(cert.degree);
    ordered_json entries = ordered_json::array();
    for (const LocalEntry& e : cert.entries) {
        ordered_json je;
        je["k"] = e.k;
        je["d"] = big_str(e.d);
        if (e.just.kind == Justification::Kind::AntipodalJoin) {
            je["just"] = {{"kind", "antipodal"}};
        } else {
            ordered_json sub = e.just.sub ? to_json(*e.just.sub) : ordered_json(nullptr);
            je["just"] = ordered_json{{"kind", "factor"}, {"m", e.just.m}, {"sub", std::move(sub)}};
        }
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string to_text(const CertificateDocument& doc) {
    return std::visit([](const auto& cert) { return to_json(cert).dump(2) + "\n"; }, doc);
}

CertificateDocument parse_certificate(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw FormatError("certificate: expected an object with a 'type' field");
    if (!j.at("type").is_string()) throw FormatError("certificate: 'type' must be a string");
    std::string type = j.at("type").get<std::string>();
    if (type == "zero_certificate") return parse_zero_certificate(j);
    if (type == "map_certificate") return parse_map_certificate(j, 0);
    throw FormatError("certificate: unknown type '" + type + "'");
}

CertificateDocument parse_certificate_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw FormatError("certificate: not valid JSON");
    return parse_certificate(j);
}

}  // namespace eqdeg::certjson
