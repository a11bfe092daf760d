#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdrctl {

enum class Errc {
  EmptyInput,
  OutOfRange,
  NotFinite,
  InvalidLevel,
  UnknownMethod,
  LengthMismatch,
  TooFewReplicates,
  InvalidConfig,
  InvalidAxis,
  FileNotFound,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

// Every library failure is reported through this type. `position` carries the
// offending element index (or 1-based line number for file input) when one
// exists.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(what), code_(code), position_(position) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace fdrctl
