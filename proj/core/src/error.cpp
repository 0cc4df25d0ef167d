#include "omega/error.hpp"

namespace omega {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::validation: return "validation";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::mismatch: return "mismatch";
    case ErrorKind::io: return "io";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace omega
