#pragma once

#include <stdexcept>
#include <string>

namespace loopkit {

/// Malformed input: ragged tables, out-of-range entries, bad syntax, wrong
/// algebraic type for an operation. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed input that violates an operation's algebraic precondition
/// (e.g. an even-order element handed to a square-root based construction).
class PreconditionError : public std::domain_error {
 public:
  PreconditionError(std::string stage, const std::string& what)
      : std::domain_error(what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

/// A capped computation (group closure, search budget) stopped before
/// finishing and the caller required a complete answer.
class IncompleteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency failure, e.g. a division table that should be a
/// bijection but is not. Indicates an upstream precondition was violated.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace loopkit
