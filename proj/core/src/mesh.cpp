// SPDX-License-Identifier: Apache-2.0
#include "tia/mesh.hpp"

#include "tia/errors.hpp"
#include "tia/parallel.hpp"

namespace tia {

GeometryReport geometry_report(const Tetrahedron& k) {
  GeometryReport r;
  r.h_K = diameter(k);
  const SphereRadii radii = inradius_circumradius(k);
  r.rho_K = radii.rho;
  r.R_sphere = radii.R_sphere;
  const ProjectedCircumradius pc = projected_circumradius(k);
  r.R_K = pc.R_K;
  r.facets = pc.per_facet;
  return r;
}

std::vector<AuditRow> audit_mesh(const MeshFile& mesh, double threshold, unsigned threads) {
  std::vector<AuditRow> rows(mesh.tets.size());
  parallel_for(mesh.tets.size(), threads, [&](std::size_t i) {
    AuditRow& row = rows[i];
    row.index = i;
    try {
      std::array<Point3, 4> v;
      for (std::size_t j = 0; j < 4; ++j) {
        const int idx = mesh.tets[i][j];
        if (idx < 0 || static_cast<std::size_t>(idx) >= mesh.vertices.size())
          raise(Errc::ParseError, "vertex index out of range");
        v[j] = mesh.vertices[static_cast<std::size_t>(idx)];
      }
      const GeometryReport g = geometry_report(Tetrahedron::from_vertices(v));
      row.h_K = g.h_K;
      row.rho_K = g.rho_K;
      row.R_sphere = g.R_sphere;
      row.R_K = g.R_K;
      row.R_K_over_h_K = g.R_K / g.h_K;
      row.sliver_flag = row.R_K_over_h_K > threshold;
    } catch (const Error& e) {
      row.degenerate = true;
      row.diagnostic = e.what();
    }
  });
  return rows;
}

}  // namespace tia
