#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dforge {

enum class Errc {
  DuplicateDart,
  DartOutOfRange,
  UnpairedDart,
  FixedDart,
  Disconnected,
  OddCharacteristic,
  NotFourValent,
  NotBipartite,
  NotAdmissible,
  GenusTooSmall,
  BasisMismatch,
  ParityMismatch,
  CapExceeded,
  SyntaxError,
  SchemaError,
  InvariantMismatch,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dforge
