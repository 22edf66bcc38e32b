#pragma once

#include <stdexcept>
#include <string>

namespace caplab {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Precondition,
  DivisionByZero,
};

// Every failure raised by the library carries one of the codes above so the
// C API can map it onto a status value without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::Precondition, message);
}

inline void require_argument(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, message);
}

}  // namespace caplab
