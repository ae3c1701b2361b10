#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace troute {

enum class ErrorCode {
  InvalidParams,
  OutOfBand,
  WindowTooSmall,
  SizeTooSmall,
  SingularSystem,
  PacketClipped,
  NormDrift,
  MismatchedConfig,
  EmptyGrid,
  IoFailure,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for precondition violations, false for internal tolerance
  /// failures (NormDrift, SingularSystem).
  bool is_precondition() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace troute
