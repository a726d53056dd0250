#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Violated operation precondition (order mismatch, nonzero constant term, ...).
struct contract_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Argument outside the region where an evaluation is defined.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Invalid class parameters or catalog id.
struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Quadrature or series summation failed to converge.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The radius equation has no sign change on the search bracket.
struct inconsistent_problem_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested closed form is not available for this catalog entry.
struct unsupported_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace bohr
