#pragma once

#include <stdexcept>
#include <string>

namespace eulercert {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

/// Operands from different field instances (different variant or different d).
struct MixedFields : Error {
  explicit MixedFields(const std::string& what) : Error("mixed fields: " + what) {}
};

struct BadDeterminant : Error {
  explicit BadDeterminant(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("singular matrix") {}
};

struct NotHyperbolic : Error {
  explicit NotHyperbolic(const std::string& what) : Error(what) {}
};

struct NotARepresentation : Error {
  explicit NotARepresentation(const std::string& what) : Error(what) {}
};

/// Raised when an eigen-splitting would require extending an already
/// extended field (or a RatFunc field with a non-square discriminant).
struct UnsupportedExtension : Error {
  explicit UnsupportedExtension(const std::string& what) : Error(what) {}
};

struct KappaOutOfRange : Error {
  explicit KappaOutOfRange(const std::string& what) : Error(what) {}
};

struct NonRationalField : Error {
  explicit NonRationalField(const std::string& what) : Error(what) {}
};

struct PrecisionLoss : Error {
  explicit PrecisionLoss(const std::string& what) : Error(what) {}
};

struct CombinatorialBlowup : Error {
  explicit CombinatorialBlowup(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  explicit ParseError(const std::string& what) : Error(what), position(0) {}
  std::size_t position;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace eulercert
