#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braid3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed braid-word text. `offset` is the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error("syntax error at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Input would expand past the letter cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class InvalidForm : public Error {
 public:
  using Error::Error;
};

class NotAKnot : public Error {
 public:
  explicit NotAKnot(int components)
      : Error("closure has " + std::to_string(components) + " components"),
        components_(components) {}
  int components() const noexcept { return components_; }

 private:
  int components_;
};

class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

class NotStronglyQuasipositive : public Error {
 public:
  NotStronglyQuasipositive()
      : Error("closure is not strongly quasipositive (Xu power n < 0)") {}
};

class DisconnectedSurface : public Error {
 public:
  using Error::Error;
};

/// The requested Levine-Tristram angle sits on (or numerically next to) a
/// root of the Alexander polynomial.
class AtJump : public Error {
 public:
  using Error::Error;
};

}  // namespace braid3
