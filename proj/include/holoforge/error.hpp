#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holoforge {

enum class ErrorKind {
  invalid_argument,
  shape_mismatch,
  degenerate_input,
  format,
  checksum,
  io,
  not_found,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the CLI can report a
// stable machine-parsable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace holoforge
