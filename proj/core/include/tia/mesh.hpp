// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include "tia/geometry.hpp"
#include "tia/projection.hpp"

namespace tia {

/// Per-element quality measures plus the per-facet projection data.
struct GeometryReport {
  double h_K = 0;
  double rho_K = 0;
  double R_sphere = 0;
  double R_K = 0;
  std::array<FacetProjectionReport, 4> facets{};
};

GeometryReport geometry_report(const Tetrahedron& k);

struct MeshFile {
  std::vector<Point3> vertices;
  std::vector<std::array<int, 4>> tets;
};

/// Heuristic cut-off on R_K / h_K above which an element is reported as a sliver.
inline constexpr double kDefaultSliverThreshold = 10.0;

struct AuditRow {
  std::size_t index = 0;
  bool degenerate = false;
  std::string diagnostic;  // set for degenerate rows
  double h_K = 0;
  double rho_K = 0;
  double R_sphere = 0;
  double R_K = 0;
  double R_K_over_h_K = 0;
  bool sliver_flag = false;
};

/// One row per element; invalid elements produce a degenerate row instead of
/// aborting the audit.
std::vector<AuditRow> audit_mesh(const MeshFile& mesh, double threshold = kDefaultSliverThreshold,
                                 unsigned threads = 0);

}  // namespace tia
