// SPDX-License-Identifier: Apache-2.0
#include "tia/csv.hpp"

#include <charconv>
#include <cmath>

namespace tia {

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_records_csv(std::ostream& out, const std::vector<ErrorRatioRecord>& records) {
  out << kRecordCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.family_kind << ',' << format_double(r.kind_param) << ',' << format_double(r.h_param)
        << ',' << r.k << ',' << r.m << ',' << format_double(r.p) << ',' << r.function_id << ','
        << format_double(r.h_K) << ',' << format_double(r.rho_K) << ','
        << format_double(r.R_sphere) << ',' << format_double(r.R_K) << ','
        << format_double(r.error_seminorm) << ',' << format_double(r.data_seminorm) << ','
        << format_double(r.ratio_projected) << ',' << format_double(r.ratio_naive) << '\n';
  }
}

}  // namespace tia
