#pragma once

#include <stdexcept>
#include <string>

namespace gramquad {

/// Input outside an operation's valid domain (bad point count, degree above
/// the cap, length mismatch, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Internal numerical failure, e.g. a root iteration that did not converge.
/// Indicates a defect rather than bad input.
class ComputationError : public std::runtime_error {
 public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gramquad
