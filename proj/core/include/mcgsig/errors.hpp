#pragma once

#include <stdexcept>
#include <string>

namespace mcgsig {

/// The (p,q) solution space of the class function is not 1-dimensional:
/// the pair (M,w) is not realized by a mapping class, or the model is corrupt.
struct DegenerateKernel : std::runtime_error {
  explicit DegenerateKernel(const std::string& what) : std::runtime_error(what) {}
};

/// A matrix that should preserve the symplectic form does not.
struct SymplecticityViolation : std::runtime_error {
  explicit SymplecticityViolation(const std::string& what) : std::runtime_error(what) {}
};

/// The form on V_{A,B} came out non-symmetric: a transcription error upstream.
struct GramAsymmetry : std::runtime_error {
  explicit GramAsymmetry(const std::string& what) : std::runtime_error(what) {}
};

struct NonLagrangian : std::runtime_error {
  explicit NonLagrangian(const std::string& what) : std::runtime_error(what) {}
};

/// A coset representative of W failed to split as a' + b' + c' = 0.
struct DecompositionFailure : std::runtime_error {
  explicit DecompositionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct WordParseError : std::runtime_error {
  WordParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}
  std::size_t position;
};

struct UnknownGenerator : std::runtime_error {
  explicit UnknownGenerator(const std::string& name)
      : std::runtime_error("unknown generator '" + name + "'"), name(name) {}
  std::string name;
};

struct NoConsistentAssignment : std::runtime_error {
  explicit NoConsistentAssignment(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcgsig
