#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "eqdeg/certificates.hpp"
#include "eqdeg/errors.hpp"

namespace eqdeg::certjson {

using CertificateDocument =
    std::variant<certificates::ZeroCertificate, certificates::MapCertificate>;

// Big integers (d, b, c, N, degree, entry values) are emitted as decimal
// strings so consumers never need 64-bit assumptions; n, k, m, p, s, t stay
// plain JSON integers.
nlohmann::ordered_json to_json(const certificates::ZeroCertificate& cert);
nlohmann::ordered_json to_json(const certificates::MapCertificate& cert);
std::string to_text(const CertificateDocument& doc);

// Strict parsing of untrusted documents: unknown fields, missing fields,
// wrong JSON types, malformed integer strings and wrong vector lengths all
// raise FormatError. Integer fields accept either a JSON integer or a
// decimal string.
CertificateDocument parse_certificate(const nlohmann::json& j);
CertificateDocument parse_certificate_text(const std::string& text);

}  // namespace eqdeg::certjson
