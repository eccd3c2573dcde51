#pragma once

#include <stdexcept>
#include <string>

namespace vpv {

// Argument outside the region where an operation is defined.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A series needed more terms than the configured cap.
class non_convergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No degree cap within the configured maximum reaches the requested
// tolerance. Carries the best bound that was achievable.
class tail_bound_exceeds_tol : public std::runtime_error {
 public:
  tail_bound_exceeds_tol(const std::string& what, double achievable)
      : std::runtime_error(what), achievable_(achievable) {}
  double achievable() const noexcept { return achievable_; }

 private:
  double achievable_;
};

// NaN or infinity escaped a computation.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vpv
