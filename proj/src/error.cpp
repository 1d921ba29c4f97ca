#include "rotpath/error.hpp"

namespace rotpath {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BadLength: return "BadLength";
    case Errc::BadEndpoint: return "BadEndpoint";
    case Errc::BadStep: return "BadStep";
    case Errc::BelowFloor: return "BelowFloor";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidTree: return "InvalidTree";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::InvalidSite: return "InvalidSite";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      position_(position) {}

}  // namespace rotpath
