#ifndef OPTAGG_ERRORS_H_
#define OPTAGG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optagg {

// Malformed text input. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that breaks a domain invariant (self-loop, unknown node,
// disconnected graph, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller-supplied parameter out of range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance exceeds what an exhaustive routine is willing to handle.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition of an operation violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Argument that is structurally incomplete, e.g. a partial assignment.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Plan cannot be mapped onto model variables.
class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File-system failure; message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace optagg

#endif  // OPTAGG_ERRORS_H_
