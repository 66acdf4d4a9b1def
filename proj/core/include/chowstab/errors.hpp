#pragma once

#include <stdexcept>
#include <string>

namespace chowstab {

/// Malformed or inconsistent user input (bad file, non-primitive vertex, ...).
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// The polytope is structurally valid but outside the supported class
/// (not simplicial, not reflexive, not smooth, origin not interior).
struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed (Brion pole cancellation, nonzero
/// interpolation residual). Always indicates a bug, never bad input.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

/// A randomly drawn parameter sample hit a weight hyperplane; the caller
/// is expected to redraw.
struct NonGenericSampleError : std::runtime_error {
  explicit NonGenericSampleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace chowstab
