// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tia/geometry.hpp"
#include "tia/projection.hpp"
#include "tia/standard_position.hpp"

namespace tia {

struct PropertyResult {
  explicit PropertyResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string first_failure;

  [[nodiscard]] bool ok() const { return passed == total; }
  void record(bool pass, const std::string& detail = {});
};

struct SuiteReport {
  std::string name;
  std::vector<PropertyResult> properties;

  [[nodiscard]] bool ok() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  std::size_t tetrahedra = 1000;
  std::size_t standard_positions = 1000;
  std::size_t interp_tetrahedra = 100;
  std::size_t norm_draws = 100;
  double phi = kDefaultPhi;
  unsigned threads = 0;
};

/// Seeded random tetrahedra with uniform vertices in the unit cube.
std::vector<Tetrahedron> sample_tetrahedra(std::uint64_t seed, std::size_t n);

/// Seeded parameter draws covering both cases, with alpha = 1.
std::vector<StandardPosition> sample_standard_positions(std::uint64_t seed, std::size_t n);

SuiteReport verify_geometry(const VerifyOptions& opts = {});
SuiteReport verify_interp(const VerifyOptions& opts = {});
SuiteReport verify_norms(const VerifyOptions& opts = {});
SuiteReport verify_bounds(const VerifyOptions& opts = {});

std::vector<std::string> suite_names();

/// "all" runs every suite. Unknown names raise ParameterOutOfRange.
std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& opts = {});

}  // namespace tia
