#pragma once

#include <stdexcept>
#include <string>

namespace liekring {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in ambient spaces of different dimension.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Exterior powers are only defined here for characters with nonnegative multiplicities.
struct EffectivenessError : Error {
  using Error::Error;
};

/// An exact division that must be integral was not. Indicates a bug.
struct InternalConsistencyError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct UnsupportedScaleError : Error {
  using Error::Error;
};

/// Character is not invariant under the Weyl group.
struct InvarianceError : Error {
  using Error::Error;
};

struct DerivationError : Error {
  using Error::Error;
};

/// Truncated lattice computation did not stabilize.
struct InconclusiveError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace liekring
