#pragma once

#include <stdexcept>
#include <string>

namespace primecert {

// Bad arguments from a caller (violated preconditions, malformed input).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A real function was asked to evaluate outside its certified domain.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace primecert
