// SPDX-License-Identifier: Apache-2.0
#include "tia/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tia/csv.hpp"
#include "tia/errors.hpp"

namespace tia {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    raise(Errc::ParseError, e.what());
  }
}

Point3 as_point(const json& j) {
  if (!j.is_array() || j.size() != 3) raise(Errc::ParseError, "expected [x, y, z]");
  Point3 p;
  for (int i = 0; i < 3; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number()) raise(Errc::ParseError, "coordinate is not a number");
    p[i] = j[static_cast<std::size_t>(i)].get<double>();
  }
  return p;
}

json point_json(const Point3& p) { return json::array({p.x(), p.y(), p.z()}); }

json number_or_inf(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

}  // namespace

Tetrahedron parse_tetrahedron_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() ||
      j["vertices"].size() != 4)
    raise(Errc::ParseError, "expected {\"vertices\": [4 points]}");
  std::array<Point3, 4> v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = as_point(j["vertices"][i]);
  return Tetrahedron::from_vertices(v);
}

std::string tetrahedron_to_json(const Tetrahedron& k) {
  json verts = json::array();
  for (const auto& p : k.vertices()) verts.push_back(point_json(p));
  return json{{"vertices", verts}}.dump();
}

MultiPolynomial parse_polynomial_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    raise(Errc::ParseError, "expected {\"terms\": [...]}");
  MultiPolynomial q;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef") || !t["exp"].is_array() ||
        t["exp"].size() != 3 || !t["coef"].is_number())
      raise(Errc::ParseError, "term needs \"exp\": [i,j,l] and numeric \"coef\"");
    Exponent e{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!t["exp"][i].is_number_integer() || t["exp"][i].get<int>() < 0)
        raise(Errc::ParseError, "exponents must be non-negative integers");
      e[i] = t["exp"][i].get<int>();
    }
    q += MultiPolynomial::monomial(e, t["coef"].get<double>());
  }
  return q;
}

std::string polynomial_to_json(const MultiPolynomial& q) {
  json terms = json::array();
  for (const auto& [e, c] : q.terms())
    terms.push_back({{"exp", json::array({e[0], e[1], e[2]})}, {"coef", c}});
  return json{{"terms", terms}}.dump();
}

MeshFile parse_mesh_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("vertices") || !j.contains("tets") ||
      !j["vertices"].is_array() || !j["tets"].is_array())
    raise(Errc::ParseError, "expected {\"vertices\": [...], \"tets\": [...]}");
  MeshFile m;
  for (const auto& v : j["vertices"]) m.vertices.push_back(as_point(v));
  for (const auto& t : j["tets"]) {
    if (!t.is_array() || t.size() != 4) raise(Errc::ParseError, "each tet needs 4 vertex indices");
    std::array<int, 4> idx{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!t[i].is_number_integer()) raise(Errc::ParseError, "vertex index is not an integer");
      idx[i] = t[i].get<int>();
      if (idx[i] < 0 || static_cast<std::size_t>(idx[i]) >= m.vertices.size())
        raise(Errc::ParseError, "vertex index out of range");
    }
    m.tets.push_back(idx);
  }
  return m;
}

std::string mesh_to_json(const MeshFile& mesh) {
  json verts = json::array();
  for (const auto& p : mesh.vertices) verts.push_back(point_json(p));
  json tets = json::array();
  for (const auto& t : mesh.tets) tets.push_back(json::array({t[0], t[1], t[2], t[3]}));
  return json{{"vertices", verts}, {"tets", tets}}.dump();
}

std::string geometry_report_to_json(const GeometryReport& r) {
  json facets = json::array();
  for (const auto& f : r.facets)
    facets.push_back({{"base", f.base_index},
                      {"R_B", f.R_B},
                      {"R_P", f.R_P},
                      {"theta_at_max", f.theta_at_max},
                      {"ratio", f.ratio}});
  json j{{"h_K", r.h_K}, {"rho_K", r.rho_K}, {"R_sphere", r.R_sphere}, {"R_K", r.R_K},
         {"facets", facets}};
  return j.dump(2);
}

std::string record_to_json(const ErrorRatioRecord& r) {
  json j{{"family", r.family_kind},
         {"kind_param", r.kind_param},
         {"h_param", r.h_param},
         {"k", r.k},
         {"m", r.m},
         {"p", number_or_inf(r.p)},
         {"function_id", r.function_id},
         {"h_K", r.h_K},
         {"rho_K", r.rho_K},
         {"R_sphere", r.R_sphere},
         {"R_K", r.R_K},
         {"error_seminorm", r.error_seminorm},
         {"data_seminorm", r.data_seminorm},
         {"ratio_projected", number_or_inf(r.ratio_projected)},
         {"ratio_naive", number_or_inf(r.ratio_naive)},
         {"degree_warning", r.degree_warning}};
  return j.dump(2);
}

std::string audit_to_json(const std::vector<AuditRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    if (r.degenerate) {
      out.push_back({{"index", r.index}, {"degenerate", true}, {"diagnostic", r.diagnostic}});
      continue;
    }
    out.push_back({{"index", r.index},
                   {"degenerate", false},
                   {"h_K", r.h_K},
                   {"rho_K", r.rho_K},
                   {"R_sphere", r.R_sphere},
                   {"R_K", r.R_K},
                   {"R_K_over_h_K", r.R_K_over_h_K},
                   {"sliver_flag", r.sliver_flag}});
  }
  return out.dump(2);
}

std::string audit_to_csv(const std::vector<AuditRow>& rows) {
  std::ostringstream os;
  os << "index,h_K,rho_K,R_sphere,R_K,R_K_over_h_K,sliver_flag,degenerate\n";
  for (const auto& r : rows) {
    os << r.index << ',';
    if (r.degenerate) {
      os << ",,,,,,true\n";
      continue;
    }
    os << format_double(r.h_K) << ',' << format_double(r.rho_K) << ','
       << format_double(r.R_sphere) << ',' << format_double(r.R_K) << ','
       << format_double(r.R_K_over_h_K) << ',' << (r.sliver_flag ? "true" : "false")
       << ",false\n";
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tia
