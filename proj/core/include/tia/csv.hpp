// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tia/experiments.hpp"

namespace tia {

inline constexpr std::string_view kRecordCsvHeader =
    "family,kind_param,h_param,k,m,p,function_id,h_K,rho_K,R_sphere,R_K,"
    "error_seminorm,data_seminorm,ratio_projected,ratio_naive";

/// Shortest round-trip decimal; infinity is written as "inf".
std::string format_double(double x);

void write_records_csv(std::ostream& out, const std::vector<ErrorRatioRecord>& records);

}  // namespace tia
