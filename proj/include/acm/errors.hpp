#pragma once

#include <stdexcept>

namespace acm {

/// The request has no answer: an empty (d,s) family, a gap, a value outside R_d.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A visit or enumeration ran past its vertex budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace acm
