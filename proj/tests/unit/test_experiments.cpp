// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <sstream>

#include "test_util.hpp"
#include "tia/csv.hpp"
#include "tia/experiments.hpp"
#include "tia/interpolation.hpp"

using namespace tia;

TEST(Sliver, VerticesAndFunction) {
  const double h = 0.1;
  const Tetrahedron k = sliver(h, 2.5);
  const MultiPolynomial v1 = sliver_v1(h, 2.5);
  for (const auto& v : k.vertices()) EXPECT_NEAR(v1(v), 0.0, 1e-15);
  EXPECT_NEAR(seminorm_sup(k, v1, 2), 2.0, 1e-12);
  // |v1|_{1,inf} = max(2h, h^(2 - alpha))
  EXPECT_NEAR(seminorm_sup(k, v1, 1), std::max(2 * h, std::pow(h, -0.5)), 1e-12);
}

TEST(Families, Construction) {
  const auto sl = make_family({SliverFamily{2.5}, {0.2, 0.1}});
  ASSERT_EQ(sl.size(), 2u);
  EXPECT_DOUBLE_EQ(sl[1].h_param, 0.1);
  const auto sq = make_family({SqueezedFamily{ReferenceKind::tilde, 0.5}, {4}});
  EXPECT_TRUE(sq[0].tet.vertex(2).isApprox(Point3(1, 0.5, 0)));
  EXPECT_TRUE(sq[0].tet.vertex(3).isApprox(Point3(0, 0, 4)));
  const auto nd = make_family({NeedleFamily{2.0}, {0.1}});
  EXPECT_TRUE(nd[0].tet.vertex(1).isApprox(Point3(2, 0, 0)));
  EXPECT_NEAR(nd[0].tet.volume(), 2 * 0.1 * 0.1 / 6, 1e-15);
  EXPECT_EQ(make_family({RandomFamily{1, 5}, {}}).size(), 5u);
  EXPECT_RAISES(make_family({SliverFamily{2.5}, {0.1, -1}}), Errc::ParameterOutOfRange);
  EXPECT_EQ(family_name({NeedleFamily{}, {}}), "needle");
}

TEST(Battery, Composition) {
  const auto b2 = function_battery(2, 1);
  EXPECT_EQ(b2.size(), 10u + kBatteryRandomCount);
  EXPECT_EQ(b2.front().id, "mono_300");
  for (const auto& f : b2) EXPECT_EQ(f.poly.degree(), 3);
  const auto b1 = function_battery(1, 1, SliverParams{0.1, 2.5});
  EXPECT_EQ(b1.back().id, "v1");
  EXPECT_EQ(function_battery(1, 1).size(), 6u + kBatteryRandomCount);
  // same seed, same battery
  EXPECT_EQ(function_battery(2, 7)[15].poly, function_battery(2, 7)[15].poly);
}

TEST(ErrorRatio, QuadraticOnHat) {
  const MultiPolynomial v = MultiPolynomial::monomial({2, 0, 0});
  const ErrorRatioRecord r = error_ratio(reference_hat(), v, 1, 0, 2.0);
  // I v = x on K-hat
  const MultiPolynomial e = v - MultiPolynomial::variable(0);
  EXPECT_NEAR(r.error_seminorm, std::sqrt(integrate_polynomial(reference_hat(), e * e)), 1e-12);
  EXPECT_NEAR(r.data_seminorm, std::sqrt(4.0 / 6.0), 1e-12);
  EXPECT_NEAR(r.ratio_projected, r.error_seminorm / (2.0 * r.data_seminorm), 1e-12);
  EXPECT_FALSE(r.degree_warning);
}

TEST(ErrorRatio, PolynomialsInPkGiveZero) {
  const MultiPolynomial v = MultiPolynomial::affine(1, Point3(1, 2, 3));
  const ErrorRatioRecord r = error_ratio(reference_hat(), v, 1, 0, 2.0);
  EXPECT_EQ(r.error_seminorm, 0.0);
  EXPECT_EQ(r.ratio_projected, 0.0);
}

TEST(ErrorRatio, InvalidExponent) {
  EXPECT_RAISES(error_ratio(reference_hat(), MultiPolynomial::variable(0), 1, 1, 2.0), Errc::InvalidPForKM);
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const ElementFamily fam{SliverFamily{2.5}, {0.2, 0.1}};
  const SweepResult a = bound_sweep(fam, 1, 1, kInfinity, 3, 1);
  const SweepResult b = bound_sweep(fam, 1, 1, kInfinity, 3, 4);
  ASSERT_EQ(a.records.size(), b.records.size());
  std::ostringstream sa;
  std::ostringstream sb;
  write_records_csv(sa, a.records);
  write_records_csv(sb, b.records);
  EXPECT_EQ(sa.str(), sb.str());
  EXPECT_EQ(a.per_element.size(), 2u);
}

TEST(Sweep, CsvLayout) {
  const SweepResult r = bound_sweep({SqueezedFamily{}, {1, 4}}, 2, 0, 2.0, 5, 1);
  std::ostringstream os;
  write_records_csv(os, r.records);
  std::istringstream in(os.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, kRecordCsvHeader);
  std::string row;
  std::getline(in, row);
  EXPECT_EQ(row.rfind("squeezed,1,1,2,0,2,mono_300,", 0), 0u) << row;
  EXPECT_EQ(format_double(kInfinity), "inf");
  EXPECT_EQ(format_double(0.1), "0.1");
}

TEST(RejectionDemo, NaiveQuotientGrowsProjectedStaysFlat) {
  const auto rows = sliver_rejection_demo(2.5, {0.2, 0.1, 0.05, 0.025, 0.0125});
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_GE(rows[i].naive_quotient / rows[i - 1].naive_quotient, 2.0);
  double lo = 1e300;
  double hi = 0;
  for (const auto& r : rows) {
    lo = std::min(lo, r.projected_quotient);
    hi = std::max(hi, r.projected_quotient);
    EXPECT_LE(r.interpolant_max_coef, 1e-12);
  }
  EXPECT_LE(hi / lo, 3.0);
  EXPECT_RAISES(sliver_rejection_demo(2.0, {0.1}), Errc::ParameterOutOfRange);
}

TEST(BLowerBound, GrowsWithSqueeze) {
  const double b1 = b_lower_bound(reference_hat(), 1, 0, 2.0, 42);
  const double b16 = b_lower_bound(squeeze1(1, 16)(reference_hat()), 1, 0, 2.0, 42);
  EXPECT_GT(b1, 0);
  EXPECT_GT(b16, b1);
}
