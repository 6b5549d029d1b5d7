#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wcdim {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// coeff ----------------------------------------------------------------------

// An expression-kind coefficient produced a value outside [0, 1).
struct EvaluatesOutsideUnit : Error {
  using Error::Error;
};

// Expression sampling has not settled after the allowed refinement passes:
// fresh probe samples still fall below the computed suffix minima.
struct GridTooCoarse : Error {
  using Error::Error;
};

// moran ----------------------------------------------------------------------

struct InvalidCoefficient : Error {
  using Error::Error;
};

// ifs ------------------------------------------------------------------------

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  NoConvergence(const std::string& what, long iterations)
      : Error(what), iterations(iterations) {}
  long iterations;
};

// expression -----------------------------------------------------------------

struct ExpressionDomainError : Error {
  using Error::Error;
};

struct UnboundVariable : Error {
  using Error::Error;
};

// attractor ------------------------------------------------------------------

struct GridTooLarge : Error {
  using Error::Error;
};

struct EmptySet : Error {
  using Error::Error;
};

// cover ----------------------------------------------------------------------

struct TooManyWords : Error {
  using Error::Error;
};

struct DepthTooShallow : Error {
  using Error::Error;
};

struct DegenerateK : Error {
  using Error::Error;
};

// boxdim ---------------------------------------------------------------------

struct ScaleTooSmall : Error {
  using Error::Error;
};

struct DegenerateFit : Error {
  using Error::Error;
};

// scene ----------------------------------------------------------------------

// Scene-file errors carry a 1-based line and column.
struct SceneError : Error {
  SceneError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct SyntaxError : SceneError {
  using SceneError::SceneError;
};

struct DuplicateMapName : SceneError {
  using SceneError::SceneError;
};

struct FewerThanTwoMaps : SceneError {
  using SceneError::SceneError;
};

struct CoefficientOutOfRange : SceneError {
  using SceneError::SceneError;
};

}  // namespace wcdim
