#pragma once

#include <stdexcept>
#include <string>

namespace homind {

/// Malformed external input (graph6, edge lists, certificate files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on arguments was violated.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// An instance exceeds a documented size guard.
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homind
