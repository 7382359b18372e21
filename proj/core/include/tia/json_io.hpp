// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "tia/experiments.hpp"
#include "tia/geometry.hpp"
#include "tia/mesh.hpp"
#include "tia/polynomial.hpp"

namespace tia {

// JSON text in and out. Parse failures raise Errc::ParseError; geometry
// failures keep their own codes.

/// {"vertices": [[x,y,z], x4]}
Tetrahedron parse_tetrahedron_json(const std::string& text);
std::string tetrahedron_to_json(const Tetrahedron& k);

/// {"terms": [{"exp": [i,j,l], "coef": c}, ...]}
MultiPolynomial parse_polynomial_json(const std::string& text);
std::string polynomial_to_json(const MultiPolynomial& q);

/// {"vertices": [[x,y,z], ...], "tets": [[i,j,k,l], ...]}
MeshFile parse_mesh_json(const std::string& text);
std::string mesh_to_json(const MeshFile& mesh);

std::string geometry_report_to_json(const GeometryReport& r);
/// p = infinity is written as the string "inf".
std::string record_to_json(const ErrorRatioRecord& r);
std::string audit_to_json(const std::vector<AuditRow>& rows);
std::string audit_to_csv(const std::vector<AuditRow>& rows);

std::string read_text_file(const std::string& path);

}  // namespace tia
