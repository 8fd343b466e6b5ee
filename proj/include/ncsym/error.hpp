#pragma once

#include <stdexcept>
#include <string>

namespace ncsym {

/// Base of every error raised by the library. `code()` is a short stable
/// identifier suitable for machine parsing.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed textual input (partitions, words, coefficients, JSON payloads).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("parse_error", message) {}
};

/// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error("precondition", message) {}
};

class AlphabetMismatch : public Error {
 public:
  explicit AlphabetMismatch(const std::string& message)
      : Error("alphabet_mismatch", message) {}
};

/// A computed result contradicts a structural guarantee (e.g. two
/// independent computations disagree).
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error("internal", message) {}
};

}  // namespace ncsym
