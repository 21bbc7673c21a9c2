#pragma once

#include <stdexcept>

namespace dfacons {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad symbols, bad files, mismatched alphabets.
struct InputError : Error {
  using Error::Error;
};

// A guard against combinatorial blow-up was hit.
struct CapacityError : Error {
  using Error::Error;
};

// An operation was called outside its stated contract.
struct PreconditionError : Error {
  using Error::Error;
};

// A supposedly-impossible state was reached; indicates a defect.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace dfacons
