#pragma once

#include <stdexcept>
#include <string>

namespace lcdk {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed concrete syntax or an unresolved definition reference.
// position() is a 0-based byte offset into the input text.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// A term, map or event model mentions an atomic term outside the
// signature in scope, or two structures disagree on their signature.
class SignatureError : public Error {
public:
  using Error::Error;
};

// Unknown state or proposition during evaluation.
class EvalError : public Error {
public:
  using Error::Error;
};

// A configurable guard (memo size, oracle state bound, candidate budget)
// was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

}  // namespace lcdk
