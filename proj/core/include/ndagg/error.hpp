#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ndagg {

// Input that breaks a documented invariant. When the value came from a
// document, path() names the offending field, e.g. "evaluations[2][1]".
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what, std::string path = {})
      : std::invalid_argument(path.empty() ? what : path + ": " + what),
        message_(what),
        path_(std::move(path)) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& path() const noexcept { return path_; }

  // The same error seen from an enclosing document: within("order") turns
  // path "tau" into "order.tau" and "[2]" into "order[2]".
  ValidationError within(const std::string& prefix) const {
    if (path_.empty()) return ValidationError(message_, prefix);
    return ValidationError(message_, path_.front() == '[' ? prefix + path_ : prefix + "." + path_);
  }

 private:
  std::string message_;
  std::string path_;
};

// A construction or evaluation contract that cannot be honoured, such as a
// failed order-compatibility gate.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what, std::string axiom = {})
      : std::logic_error(what), axiom_(std::move(axiom)) {}

  // Identifier of the failed axiom ("SV9", "dominance", ...), if any.
  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

}  // namespace ndagg
