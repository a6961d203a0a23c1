#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mseg {

enum class ErrorCode {
  EmptySegment,
  EmptyMultisegment,
  PreconditionViolated,
  InvalidMatching,
  TooLarge,
  SupportMismatch,
  NotApplicable,
  InvalidConfig,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the textual parser; position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::ParseError, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mseg
