#include "fdrctl/error.hpp"

namespace fdrctl {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotFinite: return "NotFinite";
    case Errc::InvalidLevel: return "InvalidLevel";
    case Errc::UnknownMethod: return "UnknownMethod";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooFewReplicates: return "TooFewReplicates";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::InvalidAxis: return "InvalidAxis";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace fdrctl
