#pragma once

#include <stdexcept>
#include <string>

namespace cliqueline {

// Malformed arguments: out-of-range sizes, unknown vertex ids, bad specs.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well formed but violates an operation's precondition
// (e.g. a wheel-free routine handed a graph containing a wheel).
class PreconditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A collapsible pair that is stale or not free in the complex it is applied to.
class InvalidCollapse : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search that ran out of its enumeration budget before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cliqueline
