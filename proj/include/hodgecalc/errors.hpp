#ifndef HODGECALC_ERRORS_HPP
#define HODGECALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hodgecalc {

// Error taxonomy shared by the library and the CLI exit-code contract:
// argument/range/codimension errors are caller mistakes (CLI exit 1),
// hypothesis and inconsistency errors mean the requested derivation is not
// licensed by the supplied data (CLI exit 2).

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract argument (dimension mismatch, n < 1, ...).
struct ArgumentError : Error {
  using Error::Error;
};

/// Degree or index outside the declared range of an aggregation.
struct RangeError : Error {
  using Error::Error;
};

/// Blow-up center of codimension < 2.
struct CodimensionError : ArgumentError {
  using ArgumentError::ArgumentError;
};

/// Operation deliberately not provided for these inputs (e.g. twisted Kunneth).
struct UnsupportedError : Error {
  using Error::Error;
};

/// A mathematical hypothesis required by the operation is not satisfied,
/// e.g. the strong-HKR characteristic gate. The operation refuses rather
/// than returning an unwarranted value.
struct HypothesisError : Error {
  using Error::Error;
};

/// Supplied data contradicts an a-priori bound (negative defect entry).
struct InconsistencyError : Error {
  using Error::Error;
};

/// Fan data violates the smooth-complete-fan invariants.
struct InvalidFanError : Error {
  using Error::Error;
};

}  // namespace hodgecalc

#endif
