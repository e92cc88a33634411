#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyck {

/// Raised when an operation is asked for a value outside its mathematical domain
/// (non-finite input, the zero vector of a projective space, a blown-down point).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A numeric limit did not settle. Carries the step-to-step distances seen.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, std::vector<double> trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}

  [[nodiscard]] const std::vector<double>& trace() const noexcept { return trace_; }

private:
  std::vector<double> trace_;
};

} // namespace dyck
