#pragma once

#include <stdexcept>
#include <string>

namespace qmod {

// Thrown when an iterative scheme (truncation doubling, adaptive
// quadrature) fails to reach its tolerance within its budget.
// The CLI maps this to exit code 3; validation failures
// (std::invalid_argument) map to exit code 2.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qmod
