#pragma once

#include <stdexcept>
#include <string>

namespace secantq {

struct SqError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text does not match the braid word / move script grammar.
struct SyntaxError : SqError {
  using SqError::SqError;
};

// A generator index exceeds the strand count.
struct OutOfRangeError : SqError {
  using SqError::SqError;
};

// A rewriting move's pattern is absent at the stated position.
struct NotApplicableError : SqError {
  using SqError::SqError;
};

// A plat operation was requested on an odd strand count.
struct ParityError : SqError {
  using SqError::SqError;
};

// The layout is unusable: collinear initial points or coincident strands.
struct DegenerateLayoutError : SqError {
  using SqError::SqError;
};

// A realization violates genericity; `witness` describes the offending
// configuration (equal times, tangency, boundary root, quadrisecant).
struct GenericityFailure : SqError {
  explicit GenericityFailure(const std::string& witness)
      : SqError("genericity failure: " + witness), witness(witness) {}
  std::string witness;
};

struct GenericityExhausted : SqError {
  using SqError::SqError;
};

struct InconsistentEventsError : SqError {
  using SqError::SqError;
};

// The reduced sign expression vanished: the middle strand is tangent.
struct TangencyError : SqError {
  using SqError::SqError;
};

struct AxiomError : SqError {
  using SqError::SqError;
};

}  // namespace secantq
