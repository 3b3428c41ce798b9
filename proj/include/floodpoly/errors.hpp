#pragma once

#include <stdexcept>
#include <string>

namespace floodpoly {

/// Input exceeds a configured or structural size cap (enumeration cap,
/// canonical-form bound, composition cap).
struct TooLargeError : std::runtime_error {
    explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

/// Text input does not match the expected grammar (polynomial, family spec,
/// edge list, graph6).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace floodpoly
