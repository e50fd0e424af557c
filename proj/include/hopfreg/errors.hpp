#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfreg {

// Error taxonomy mirrors the CLI exit codes:
//   usage 4, validation 2, resource 3, theorem disagreement 1.

/// Caller misuse: mismatched parents, inconsistent dimensions, bad arguments.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data violates a structural axiom (associativity, Hopf laws, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation's stated precondition does not hold for the given input.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed the configured cap; carries the cap that
/// would have been required.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t required_cap)
      : std::runtime_error(what), required_cap(required_cap) {}
  std::uint64_t required_cap;
};

/// A cross-validated identity that must hold by theory failed on concrete
/// data.  This is never acceptable output; it signals a bug somewhere.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Rational idempotent splitting hit a factor it cannot certify or split
/// with rational-root and squarefree tools.
class NotSplitOverRationals : public std::runtime_error {
 public:
  explicit NotSplitOverRationals(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopfreg
