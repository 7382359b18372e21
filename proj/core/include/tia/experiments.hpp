// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tia/geometry.hpp"
#include "tia/polynomial.hpp"
#include "tia/sobolev.hpp"

namespace tia {

enum class ReferenceKind { hat, tilde };

// Element families. The parameter grid holds h (sliver), b (squeezed) or the
// thickness eps (needle); it is ignored for random families.
struct SliverFamily { double alpha_exponent = 2.5; };
struct SqueezedFamily { ReferenceKind which = ReferenceKind::hat; double a = 1.0; };
/// sq2(length, eps, eps) applied to K-hat; thin along two axes at once.
struct NeedleFamily { double length = 1.0; };
struct RandomFamily { std::uint64_t seed = 42; int count = 10; };

using FamilyKind = std::variant<SliverFamily, SqueezedFamily, NeedleFamily, RandomFamily>;

struct ElementFamily {
  FamilyKind kind;
  std::vector<double> parameter_grid;
};

struct FamilyElement {
  Tetrahedron tet;
  double h_param;
};

/// (h,0,0), (-h,0,0), (0,-h,h^alpha), (0,h,h^alpha)
Tetrahedron sliver(double h, double alpha_exponent);
/// x^2 - h^2 + h^(2-alpha) z, which vanishes at every vertex of sliver(h, alpha).
MultiPolynomial sliver_v1(double h, double alpha_exponent);

std::vector<FamilyElement> make_family(const ElementFamily& family);
std::string family_name(const ElementFamily& family);
double family_kind_param(const ElementFamily& family);

struct BatteryFunction {
  std::string id;
  MultiPolynomial poly;
};

struct SliverParams {
  double h;
  double alpha_exponent;
};

inline constexpr int kBatteryRandomCount = 20;
inline constexpr int kMaxBatteryDegree = 4;

/// All degree-(k+1) monomials, 20 seeded random polynomials of degree k+1
/// with coefficients in [-1, 1], and v1 when k = 1 and sliver data is given.
std::vector<BatteryFunction> function_battery(int k, std::uint64_t seed,
                                              std::optional<SliverParams> sliver = std::nullopt);

/// Element-only measures shared by every function on the same element.
struct ElementMeasures {
  double h_K = 0;
  double rho_K = 0;
  double R_sphere = 0;
  double R_K = 0;
};

ElementMeasures measure_element(const Tetrahedron& k);

struct ErrorRatioRecord {
  std::string family_kind = "single";
  double kind_param = 0;
  double h_param = 0;
  int k = 1;
  int m = 0;
  double p = 2;
  std::string function_id = "custom";
  double h_K = 0;
  double rho_K = 0;
  double R_sphere = 0;
  double R_K = 0;
  double error_seminorm = 0;  // |v - I v|_{m,p,K}
  double data_seminorm = 0;   // |v|_{k+1,p,K}
  double ratio_projected = 0; // error / (R_K^m h_K^{k+1-2m} data)
  double ratio_naive = 0;     // same with R_sphere in place of R_K
  bool degree_warning = false; // deg v > k + 1
};

/// Throws InvalidPForKM if (k, m, p) is inadmissible and ZeroDataSeminorm if
/// |v|_{k+1,p} vanishes while the error does not.
ErrorRatioRecord error_ratio(const Tetrahedron& tet, const MultiPolynomial& v, int k, int m,
                             double p, const SeminormOptions& opts = {});
ErrorRatioRecord error_ratio(const Tetrahedron& tet, const ElementMeasures& measures,
                             const MultiPolynomial& v, int k, int m, double p,
                             const SeminormOptions& opts = {});

struct ElementMaximum {
  double h_param = 0;
  double max_ratio_projected = 0;
  double max_ratio_naive = 0;
};

struct SweepResult {
  std::vector<ErrorRatioRecord> records;  // element-major, battery order
  std::vector<ElementMaximum> per_element;
};

SweepResult bound_sweep(const ElementFamily& family, int k, int m, double p, std::uint64_t seed,
                        unsigned threads = 0);

/// max over the battery of |v - I v|_{m,p} / |v|_{k+1,p}: a lower bound for
/// the best interpolation constant on this element.
double b_lower_bound(const Tetrahedron& tet, int k, int m, double p, std::uint64_t seed);

struct RejectionRow {
  double h = 0;
  double error = 0;  // |v1 - I^1 v1|_{1,inf,K}
  double R_sphere = 0;
  double R_K = 0;
  double naive_quotient = 0;      // error / R_sphere
  double projected_quotient = 0;  // error / R_K
  double interpolant_max_coef = 0;
};

/// Throws ParameterOutOfRange unless alpha_exponent > 2 and every h > 0.
std::vector<RejectionRow> sliver_rejection_demo(double alpha_exponent,
                                                const std::vector<double>& h_grid);

}  // namespace tia
