#pragma once

#include <stdexcept>
#include <string>

namespace tnn {

/// Exact division was requested but the divisor does not divide the dividend.
class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two Laurent polynomials built over different variable registries were combined.
class RegistryMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked mathematical identity failed at runtime. Carries the first
/// counterexample in canonical serialization.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tnn
