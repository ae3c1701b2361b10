#include "troute/error.hpp"

namespace troute {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::OutOfBand: return "OutOfBand";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::PacketClipped: return "PacketClipped";
    case ErrorCode::NormDrift: return "NormDrift";
    case ErrorCode::MismatchedConfig: return "MismatchedConfig";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

bool Error::is_precondition() const noexcept {
  return code_ != ErrorCode::NormDrift && code_ != ErrorCode::SingularSystem;
}

}  // namespace troute
