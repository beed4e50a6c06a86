#pragma once

#include <stdexcept>
#include <string>

namespace lck {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched dimensions or malformed inputs.
struct StructuralError : Error {
  using Error::Error;
};

// Operation requested on a form of unsuitable degree.
struct DegreeError : Error {
  using Error::Error;
};

// The stored jet depth is too shallow for the requested chaining.
struct CapabilityError : Error {
  using Error::Error;
};

// A geometric precondition failed (degenerate metric, non-contraction, ...).
struct GeometryError : Error {
  using Error::Error;
};

// Bad run configuration (quadrature too coarse, unparsable keys, ...).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace lck
