#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pareto_route {

/// Malformed input text; carries the 1-based line where parsing stopped.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line), message_(what) {}
  std::size_t line() const { return line_; }
  /// The message without the line prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Well-formed input that violates a structural rule (topology mismatch,
/// negative weight, out-of-range id).
class FormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation requested on an instance whose dimension it does not support.
class UnsupportedDimension : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Oracle refused an instance above its size guard.
class OracleGuardExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pareto_route
