#include "divide_forge/error.hpp"

namespace dforge {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateDart: return "DuplicateDart";
    case Errc::DartOutOfRange: return "DartOutOfRange";
    case Errc::UnpairedDart: return "UnpairedDart";
    case Errc::FixedDart: return "FixedDart";
    case Errc::Disconnected: return "Disconnected";
    case Errc::OddCharacteristic: return "OddCharacteristic";
    case Errc::NotFourValent: return "NotFourValent";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::GenusTooSmall: return "GenusTooSmall";
    case Errc::BasisMismatch: return "BasisMismatch";
    case Errc::ParityMismatch: return "ParityMismatch";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::InvariantMismatch: return "InvariantMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace dforge
