#pragma once

#include <stdexcept>
#include <string>

namespace machinpi {

// Raised when an operation is applied outside its mathematical domain
// (division by zero, negative sqrt, pole of a tangent identity, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a numeric procedure detects that its own result cannot be
// trusted (divergence, digit regression, internal consistency failure).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// floor_to_int could not decide the floor at the current precision.
class FloorAmbiguity : public NumericError {
 public:
  FloorAmbiguity(const std::string& what, int needed_precision)
      : NumericError(what), needed_precision_(needed_precision) {}

  int needed_precision() const noexcept { return needed_precision_; }

 private:
  int needed_precision_;
};

}  // namespace machinpi
