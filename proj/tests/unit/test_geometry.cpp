// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <numbers>

#include "test_util.hpp"
#include "tia/random.hpp"

using namespace tia;

TEST(Tetrahedron, ReferenceHatMeasures) {
  const Tetrahedron& k = reference_hat();
  EXPECT_DOUBLE_EQ(k.volume(), 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(diameter(k), std::numbers::sqrt2);
  const SphereRadii r = inradius_circumradius(k);
  // inscribed radius 3V / (sum of facet areas) = 1 / (3 + sqrt 3)
  EXPECT_NEAR(r.rho, 2.0 / (3.0 + std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(r.R_sphere, std::sqrt(3.0) / 2.0, 1e-15);
}

TEST(Tetrahedron, ReferenceTildeIsValid) {
  const Tetrahedron& k = reference_tilde();
  EXPECT_DOUBLE_EQ(k.volume(), 1.0 / 6.0);
}

TEST(Tetrahedron, RejectsCoplanarAndNonFinite) {
  EXPECT_RAISES(test::tet({Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0), Point3(1, 1, 0)}),
                Errc::DegenerateElement);
  EXPECT_RAISES(test::tet({Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0),
                           Point3(0, 0, std::numeric_limits<double>::quiet_NaN())}),
                Errc::NonFinite);
}

TEST(Tetrahedron, DegeneracyThresholdIsScaleInvariant) {
  const double s = 1e-6;
  const Tetrahedron k = test::tet({Point3(0, 0, 0), Point3(s, 0, 0), Point3(0, s, 0), Point3(0, 0, s)});
  EXPECT_GT(k.volume(), 0);
}

TEST(Tetrahedron, FacetIndices) {
  EXPECT_EQ(Tetrahedron::facet_indices(0), (std::array<int, 3>{1, 2, 3}));
  EXPECT_EQ(Tetrahedron::facet_indices(2), (std::array<int, 3>{0, 1, 3}));
}

TEST(Circumcenter, EquidistantFromAllVertices) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Tetrahedron k = random_tetrahedron(rng);
    const Point3 c = circumcenter(k);
    const double r0 = (c - k.vertex(0)).norm();
    for (int j = 1; j < 4; ++j) EXPECT_NEAR((c - k.vertex(j)).norm(), r0, 1e-9 * r0);
    EXPECT_NEAR(inradius_circumradius(k).R_sphere, r0, 1e-9 * r0);
  }
}

TEST(FacetCircumradius, RightTriangleAndCollinear) {
  EXPECT_NEAR(facet_circumradius(Point3(0, 0, 0), Point3(2, 0, 0), Point3(0, 2, 0)),
              std::sqrt(2.0), 1e-15);
  EXPECT_RAISES(facet_circumradius(Point3(0, 0, 0), Point3(1, 0, 0), Point3(2, 0, 0)),
                Errc::CollinearPoints);
}

TEST(Squeeze, Examples) {
  const AffineMap id = squeeze1(1, 1);
  EXPECT_TRUE(id.linear.isIdentity());
  EXPECT_TRUE(id.translation.isZero());
  const AffineMap s2 = squeeze2(2, 1, 3);
  EXPECT_TRUE(s2(Point3(1, 0, 0)).isApprox(Point3(2, 0, 0)));
  const AffineMap composed = similarity(2) * squeeze1(0.5, 1.5);
  for (const auto& v : reference_hat().vertices())
    EXPECT_LE((s2(v) - composed(v)).norm(), 1e-15);
}

TEST(Squeeze, ParameterChecks) {
  EXPECT_RAISES(squeeze1(1.5, 1), Errc::ParameterOutOfRange);
  EXPECT_RAISES(squeeze1(0.5, 0), Errc::ParameterOutOfRange);
  EXPECT_RAISES(squeeze2(1, 2, 1), Errc::ParameterOutOfRange);
  EXPECT_RAISES(similarity(-1), Errc::ParameterOutOfRange);
}

TEST(AffineMap, InverseAndComposition) {
  Rng rng(3);
  const AffineMap f{random_rotation(rng) * 2.0, Point3(1, 2, 3)};
  const AffineMap g = f.inverse() * f;
  EXPECT_LE((g.linear - Mat3::Identity()).norm(), 1e-14);
  EXPECT_LE(g.translation.norm(), 1e-14);
  EXPECT_NEAR(f.determinant(), 8.0, 1e-13);
}

TEST(Geometry, RigidMotionInvariance) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Tetrahedron k = random_tetrahedron(rng);
    const AffineMap f{random_rotation(rng), rng.uniform_point(-3, 3)};
    const Tetrahedron m = f(k);
    EXPECT_NEAR(diameter(m), diameter(k), 1e-10);
    const SphereRadii a = inradius_circumradius(k);
    const SphereRadii b = inradius_circumradius(m);
    EXPECT_NEAR(a.rho, b.rho, 1e-10);
    EXPECT_NEAR(a.R_sphere, b.R_sphere, 1e-10 * a.R_sphere);
    EXPECT_NEAR(facet_circumradius(k.vertex(0), k.vertex(1), k.vertex(2)),
                facet_circumradius(m.vertex(0), m.vertex(1), m.vertex(2)), 1e-10);
  }
}

TEST(Geometry, SliverSphereRadius) {
  // (h,0,0), (-h,0,0), (0,-h,h^a), (0,h,h^a): circumcenter on the z axis.
  const double h = 0.1;
  const double a = 2.5;
  const Tetrahedron k = test::tet({Point3(h, 0, 0), Point3(-h, 0, 0), Point3(0, -h, std::pow(h, a)),
                                   Point3(0, h, std::pow(h, a))});
  EXPECT_NEAR(inradius_circumradius(k).R_sphere, 0.10001249921884765, 1e-14);
}
