#pragma once

#include <stdexcept>
#include <string>

namespace ocsp {

// Ill-typed data: mismatched domains, feet that do not line up, tables out
// of range. CLI maps this to exit code 2.
struct BoundaryError : std::runtime_error {
  explicit BoundaryError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural hypothesis failed: a comparison map is not invertible, a
// transformation is not natural, a graph that must be acyclic has a cycle,
// a law checker found a counterexample. CLI maps this to exit code 3.
struct StructuralError : std::runtime_error {
  explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation deliberately not provided (e.g. monoidal product of decorated
// cospans). CLI maps this to exit code 4.
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ocsp
