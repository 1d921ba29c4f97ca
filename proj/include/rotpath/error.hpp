#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rotpath {

enum class Errc {
  BadLength,
  BadEndpoint,
  BadStep,
  BelowFloor,
  ParseError,
  InvalidTree,
  SizeMismatch,
  InvalidSite,
  CapExceeded,
  IndexOutOfRange,
};

const char* to_string(Errc code) noexcept;

// Domain error. Every fallible operation in the library throws this type;
// `code()` identifies the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<std::size_t> position = std::nullopt);

  Errc code() const noexcept { return code_; }
  // Offending position (index into the input), where one exists.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace rotpath
