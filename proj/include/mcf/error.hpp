#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcf {

enum class ErrorKind {
  invalid_argument,
  zero_denominator,
  numeric_instability,
  mixed_mode_required,
  invalid_mixed_conditions,
  instance_too_large,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to a structured diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mcf
