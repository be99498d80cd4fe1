#pragma once

#include <stdexcept>
#include <string>

namespace eqdeg {

// Raised when an untrusted certificate document (or an in-memory object
// with the wrong shape) cannot even be interpreted; semantic failures are
// reported through VerifyReport instead.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eqdeg
