#pragma once

#include <stdexcept>
#include <string>

namespace discarr {

/// Precondition or shape violation in caller-supplied data.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Some k normals of an arrangement are linearly dependent.
class NonGenericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampling or enumeration budget ran out before success.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A synthesized arrangement failed independent certification.
class VerdictFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace discarr
