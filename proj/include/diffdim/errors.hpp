#pragma once

#include <stdexcept>
#include <string>

namespace diffdim {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad expressions, schema violations, precondition failures.
class InputError : public Error {
public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

/// Expression syntax error, carries the offset into the source text.
class ParseError : public InputError {
public:
  ParseError(const std::string& msg, std::size_t position)
      : InputError(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A descriptor or schedule violates the structural constraints of its family
/// (non-integer exponents, zero generators, broken chain axioms).
class FamilyViolation : public Error {
public:
  explicit FamilyViolation(const std::string& msg) : Error(msg) {}
};

/// A resource guard tripped: subset blow-up, inconclusive oracle escalation,
/// unresolved indicator search.
class ComputationGuard : public Error {
public:
  explicit ComputationGuard(const std::string& msg) : Error(msg) {}
};

/// An internal invariant failed. Always a bug.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace diffdim
