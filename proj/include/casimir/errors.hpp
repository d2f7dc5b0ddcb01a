#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

// Argument outside the mathematical domain of an operation (negative frequency, |z| > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A physically or numerically meaningless combination of inputs, e.g. a perfect
// electric conductor in direct contact with a perfect magnetic one.
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Series or quadrature did not reach the requested tolerance within its budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, long terms_used, double last_term)
      : std::runtime_error(what), terms_used_(terms_used), last_term_(last_term) {}

  long terms_used() const noexcept { return terms_used_; }
  double last_term() const noexcept { return last_term_; }

 private:
  long terms_used_;
  double last_term_;
};

// Internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace casimir
