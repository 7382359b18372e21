// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tia {

enum class Errc {
  DegenerateElement,
  NonFinite,
  CollinearPoints,
  ParameterOutOfRange,
  DegenerateProjection,
  IndexOrderMismatch,
  MissingNode,
  IllConditioned,
  DegreeOverflow,
  UnsupportedOrder,
  InvalidPForKM,
  ZeroDataSeminorm,
  ParseError,
  Internal,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace tia
