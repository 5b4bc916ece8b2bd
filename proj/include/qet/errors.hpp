#pragma once

#include <stdexcept>

namespace qet {

/// Malformed input to an operation: bad dimensions, non-unitary matrices,
/// duplicate or out-of-range qubit indices.
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A state that cannot support the requested operation (e.g. unnormalized).
class StateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Requested size exceeds what dense simulation supports.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// No negative energy can be extracted from the model (eta vanishes).
class DegenerateModelError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class ConfigurationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class EmptyLevelSetError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A party touched a qubit it does not own.
class LoccViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace qet
