#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mocs {

/// Coarse classification used by the CLI to pick an exit status.
enum class ErrorKind {
  Parse,
  Evaluation,
  InvalidInput,
  Infeasible,
  GridCapExceeded,
  CircuitCapExceeded,
  Certification,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error. `offset` is a 0-based character offset into the parsed
/// text; `line` is 1-based when the text came from a multi-line document and
/// 0 otherwise.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::size_t line = 0)
      : Error(ErrorKind::Parse, message), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

class EvalError : public Error {
 public:
  explicit EvalError(const std::string& message) : Error(ErrorKind::Evaluation, message) {}
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message) : Error(ErrorKind::InvalidInput, message) {}
};

class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& message) : Error(ErrorKind::Infeasible, message) {}
};

class GridCapError : public Error {
 public:
  GridCapError(std::uint64_t required, std::uint64_t allowed)
      : Error(ErrorKind::GridCapExceeded,
              "grid size " + std::to_string(required) + " exceeds cap " + std::to_string(allowed)),
        required_(required),
        allowed_(allowed) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t allowed() const noexcept { return allowed_; }

 private:
  std::uint64_t required_;
  std::uint64_t allowed_;
};

class CircuitCapError : public Error {
 public:
  explicit CircuitCapError(std::size_t cap)
      : Error(ErrorKind::CircuitCapExceeded,
              "number of simple circuits exceeds cap " + std::to_string(cap)) {}
};

}  // namespace mocs
