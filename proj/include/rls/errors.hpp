#pragma once

#include <stdexcept>
#include <string>

namespace rls {

// Base class for all failures this library reports deliberately.
// Precondition violations on user-supplied data throw std::invalid_argument.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

// A matrix required to have full column rank does not (smallest singular
// value below 1e-12 of the largest).
struct RankDeficient : Error {
  using Error::Error;
};

// sigma_{n+1}([A b]) is not separated from sigma_n(A); the TLS shifted
// system is (numerically) singular or indefinite.
struct NonGenericTLS : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

struct ConvergenceFailure : Error {
  using Error::Error;
};

// Discrepancy-principle target below the attainable residual floor.
struct InfeasibleTarget : Error {
  using Error::Error;
};

// Bisection bracket for the discrepancy equation hit its cap.
struct BracketExhausted : Error {
  using Error::Error;
};

struct DegenerateSignal : Error {
  using Error::Error;
};

struct DegenerateSample : Error {
  using Error::Error;
};

// Requested brute-force enumeration beyond the supported problem size.
struct SizeLimit : Error {
  using Error::Error;
};

struct CsvParseError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace rls
