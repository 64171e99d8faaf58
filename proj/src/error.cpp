#include "holoforge/error.hpp"

namespace holoforge {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::shape_mismatch: return "shape_mismatch";
    case ErrorKind::degenerate_input: return "degenerate_input";
    case ErrorKind::format: return "format";
    case ErrorKind::checksum: return "checksum";
    case ErrorKind::io: return "io";
    case ErrorKind::not_found: return "not_found";
  }
  return "unknown";
}

}  // namespace holoforge
