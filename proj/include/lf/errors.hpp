#pragma once

#include <stdexcept>
#include <string>

namespace lf {

// Invalid argument or precondition violation (bad prime, negative order, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure failed to converge or produced a non-finite value.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds the dense-array limit; callers should stream instead.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace lf
