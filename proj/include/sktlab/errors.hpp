#pragma once

#include <stdexcept>
#include <string>

namespace sktlab {

/// Input outside the mathematical domain of an operation (negative densities,
/// q < 1, a sample box touching zero where logarithms are needed, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A matrix evaluator that divides by u_i was handed an exact zero.
class SingularWeightError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The model does not carry what the operation needs (a derivative evaluator,
/// an SKT coefficient table, a two-species system, ...).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: configs, sweep specs, snapshot files, short series.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sktlab
