#pragma once

#include <stdexcept>
#include <string>

namespace vknot {

// Malformed .vkd source (token level).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid diagram (bad edge multiplicity, inconsistent orientation, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Operation applied to an unsuitable argument (virtual crossing where classical
// expected, stale move site, bad twist spec, ...).
struct OperationError : std::runtime_error {
    explicit OperationError(const std::string& what) : std::runtime_error(what) {}
};

// Exact-enumeration limit exceeded (2^n states, 2^m realizations).
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vknot
