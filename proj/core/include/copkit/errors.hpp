#pragma once

#include <stdexcept>
#include <string>

namespace copkit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A bound or generator below the smallest legal value.
struct InvalidBoundError : Error {
  using Error::Error;
};

/// Malformed custom-set file or JSON document.
struct ParseError : Error {
  using Error::Error;
};

/// A custom set with no elements.
struct EmptySetError : Error {
  using Error::Error;
};

/// Query beyond the range a set was materialized to. Callers must enlarge
/// the bound; nothing re-sieves behind their back.
struct MaterializedBoundError : Error {
  using Error::Error;
};

/// A weight that is not a point of the circle in question.
struct NotAPointError : Error {
  using Error::Error;
};

/// Chord endpoints drawn from circles with different generators.
struct GeneratorMismatchError : Error {
  using Error::Error;
};

/// Expansion query violating its preconditions (t,s >= 1, subset relation,
/// generator filter).
struct InvalidQueryError : Error {
  using Error::Error;
};

/// Figure spec violating one of its invariants.
struct FigureSpecError : Error {
  using Error::Error;
};

/// Failure writing an output stream or file.
struct IoError : Error {
  using Error::Error;
};

}  // namespace copkit
