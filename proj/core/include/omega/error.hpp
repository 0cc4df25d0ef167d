/**
 * @file error.hpp
 * @brief Exception type shared by every omega-scramble module.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace omega {

enum class ErrorKind {
  invalid_argument,  // caller passed a value outside the operation's domain
  precondition,      // structural precondition (gap, depth, horizon) violated
  validation,        // input parsed but failed a semantic check (rational slope, ...)
  infeasible,        // a generator cannot satisfy its constraints
  mismatch,          // two objects that must share parameters do not
  io,                // file could not be read or written
  parse,             // malformed JSON or descriptor
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace omega
