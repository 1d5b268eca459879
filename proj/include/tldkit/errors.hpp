#pragma once

#include <stdexcept>
#include <string>

namespace tldkit {

// Exact division was requested but the remainder is nonzero.
struct NotDivisible : std::domain_error {
  using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// A sequence index (e.g. a Chebyshev index) is out of the defined range.
struct InvalidIndex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidArguments : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Half-diagrams handed to from_halves do not fit together or the cell.
struct IncompatibleHalves : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An element does not belong to the basis of the addressed cell.
struct BasisMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MethodUnsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A structural guarantee of the diagram calculus failed; indicates a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace tldkit
