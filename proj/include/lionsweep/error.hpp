#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lionsweep {

enum class ErrorKind {
  invalid_parameter,
  invalid_set,
  invalid_lions,
  invalid_move,
  parse_error,
  resource_limit,
  infeasible_too_short,
  infeasible_parity,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::invalid_set: return "invalid-set";
    case ErrorKind::invalid_lions: return "invalid-lions";
    case ErrorKind::invalid_move: return "invalid-move";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::resource_limit: return "resource-limit";
    case ErrorKind::infeasible_too_short: return "infeasible-too-short";
    case ErrorKind::infeasible_parity: return "infeasible-parity";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure tied to a 1-based line of the input file.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lionsweep
