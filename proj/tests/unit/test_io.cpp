// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <nlohmann/json.hpp>

#include "test_util.hpp"
#include "tia/experiments.hpp"
#include "tia/json_io.hpp"
#include "tia/mesh.hpp"

using namespace tia;

TEST(TetrahedronJson, RoundTrip) {
  const Tetrahedron k = sliver(0.1, 2.5);
  const Tetrahedron back = parse_tetrahedron_json(tetrahedron_to_json(k));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(back.vertex(i), k.vertex(i));
}

TEST(TetrahedronJson, Errors) {
  EXPECT_RAISES(parse_tetrahedron_json("{"), Errc::ParseError);
  EXPECT_RAISES(parse_tetrahedron_json(R"({"vertices": [[0,0,0],[1,0,0],[0,1,0]]})"), Errc::ParseError);
  EXPECT_RAISES(parse_tetrahedron_json(R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,"a"]]})"),
                Errc::ParseError);
  EXPECT_RAISES(parse_tetrahedron_json(R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[1,1,0]]})"),
                Errc::DegenerateElement);
}

TEST(PolynomialJson, RoundTrip) {
  const MultiPolynomial q = MultiPolynomial::monomial({2, 0, 1}, -1.5) + MultiPolynomial::constant(0.25);
  EXPECT_EQ(parse_polynomial_json(polynomial_to_json(q)), q);
  EXPECT_RAISES(parse_polynomial_json(R"({"terms": [{"exp": [1, -1, 0], "coef": 1}]})"), Errc::ParseError);
  EXPECT_RAISES(parse_polynomial_json(R"({"terms": [{"exp": [1, 0], "coef": 1}]})"), Errc::ParseError);
}

TEST(GeometryReport, HatReport) {
  const auto j = nlohmann::json::parse(geometry_report_to_json(geometry_report(reference_hat())));
  EXPECT_NEAR(j["h_K"].get<double>(), std::sqrt(2.0), 1e-15);
  ASSERT_EQ(j["facets"].size(), 4u);
  double min_ratio = 1e300;
  for (const auto& f : j["facets"]) min_ratio = std::min(min_ratio, f["ratio"].get<double>());
  EXPECT_DOUBLE_EQ(j["R_K"].get<double>(), min_ratio);
}

TEST(RecordJson, InfinityAsString) {
  ErrorRatioRecord r;
  r.p = kInfinity;
  const auto j = nlohmann::json::parse(record_to_json(r));
  EXPECT_EQ(j["p"], "inf");
}

TEST(MeshAudit, HatSliverAndDegenerate) {
  MeshFile mesh;
  for (const auto& v : reference_hat().vertices()) mesh.vertices.push_back(v);
  for (const auto& v : sliver(0.01, 2.8).vertices()) mesh.vertices.push_back(v + Point3(5, 0, 0));
  mesh.vertices.push_back(Point3(1, 1, 0));
  mesh.tets = {{0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 2, 8}};
  const auto rows = audit_mesh(mesh);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_FALSE(rows[0].sliver_flag);
  EXPECT_FALSE(rows[0].degenerate);
  EXPECT_TRUE(rows[1].sliver_flag);
  EXPECT_GT(rows[1].R_K_over_h_K, 10);
  EXPECT_TRUE(rows[2].degenerate);

  const auto j = nlohmann::json::parse(audit_to_json(rows));
  EXPECT_EQ(j[2]["degenerate"], true);
  const std::string csv = audit_to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,h_K,rho_K,R_sphere,R_K,R_K_over_h_K,sliver_flag,degenerate");
}

TEST(MeshAudit, EmptyMesh) {
  const MeshFile mesh = parse_mesh_json(R"({"vertices": [], "tets": []})");
  EXPECT_TRUE(audit_mesh(mesh).empty());
  EXPECT_EQ(audit_to_json({}), "[]");
}

TEST(MeshJson, RoundTripAndIndexCheck) {
  MeshFile mesh;
  for (const auto& v : reference_hat().vertices()) mesh.vertices.push_back(v);
  mesh.tets = {{0, 1, 2, 3}};
  const MeshFile back = parse_mesh_json(mesh_to_json(mesh));
  EXPECT_EQ(back.tets, mesh.tets);
  EXPECT_RAISES(parse_mesh_json(R"({"vertices": [[0,0,0]], "tets": [[0,1,2,3]]})"), Errc::ParseError);
}
