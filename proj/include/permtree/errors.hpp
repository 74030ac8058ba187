#pragma once

#include <stdexcept>
#include <string>

namespace permtree {

/// Raised when an enumeration or graph would exceed a configured size limit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a constructed object fails one of its structural invariants.
/// `clause` names the violated property so callers can report it.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string clause, const std::string& what)
      : std::runtime_error(clause + ": " + what), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace permtree
