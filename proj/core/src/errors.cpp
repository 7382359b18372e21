// SPDX-License-Identifier: Apache-2.0
#include "tia/errors.hpp"

namespace tia {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DegenerateElement: return "DegenerateElement";
    case Errc::NonFinite: return "NonFinite";
    case Errc::CollinearPoints: return "CollinearPoints";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::DegenerateProjection: return "DegenerateProjection";
    case Errc::IndexOrderMismatch: return "IndexOrderMismatch";
    case Errc::MissingNode: return "MissingNode";
    case Errc::IllConditioned: return "IllConditioned";
    case Errc::DegreeOverflow: return "DegreeOverflow";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::InvalidPForKM: return "InvalidPForKM";
    case Errc::ZeroDataSeminorm: return "ZeroDataSeminorm";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

void raise(Errc code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace tia
