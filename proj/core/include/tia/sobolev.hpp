// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <optional>
#include <string>

#include "tia/geometry.hpp"
#include "tia/polynomial.hpp"

namespace tia {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr int kMaxSeminormOrder = 12;
inline constexpr int kMaxIntegrationDegree = 24;

/// |.|_{m,p}: derivative order m, exponent p in [1, inf].
struct SeminormSpec {
  int m = 0;
  double p = 2.0;

  [[nodiscard]] bool is_infinite() const noexcept { return p == kInfinity; }
  /// Even integer p, where |d^delta q|^p is itself a polynomial.
  [[nodiscard]] bool has_exact_path() const noexcept;
};

struct SeminormOptions {
  /// p = inf: barycentric sample lattice with this many points per edge.
  int sup_points_per_edge = 50;
  /// Numeric path: stop refining once successive values agree to this.
  double quad_rel_tol = 1e-8;
  int max_refinement_levels = 4;
  int quad_degree = 8;
};

/// int_{K-hat} x^a y^b z^c = a! b! c! / (a+b+c+3)!
double reference_monomial_integral(const Exponent& e);

/// Exact integral over K by pulling back to K-hat. Throws DegreeOverflow
/// beyond kMaxIntegrationDegree.
double integrate_polynomial(const Tetrahedron& k, const MultiPolynomial& q);

/// Dispatches to the exact path (even integer p), the sampled sup (p = inf)
/// or adaptive subdivision quadrature (any other p >= 1).
double seminorm(const Tetrahedron& k, const MultiPolynomial& q, const SeminormSpec& spec,
                const SeminormOptions& opts = {});

double seminorm_exact(const Tetrahedron& k, const MultiPolynomial& q, const SeminormSpec& spec);
double seminorm_numeric(const Tetrahedron& k, const MultiPolynomial& q, const SeminormSpec& spec,
                        const SeminormOptions& opts = {});
double seminorm_sup(const Tetrahedron& k, const MultiPolynomial& q, int m,
                    const SeminormOptions& opts = {});

struct ScalingCheck {
  double lhs;  // |q|_{k,p,K}
  double rhs;  // alpha^{3/p - k} |q o G_alpha|_{k,p,G_{1/alpha}(K)}
};

ScalingCheck scaling_identity_check(const MultiPolynomial& q, const Tetrahedron& k, double alpha,
                                    int order, double p, const SeminormOptions& opts = {});

/// Admissible exponents for interpolation order k and seminorm order m:
///   k - m = 0          : 2 < p <= inf
///   k = 1, m = 0       : 3/2 < p <= inf
///   k >= 2, k - m >= 1 : 1 <= p <= inf
bool validate_p(int k, int m, double p);

/// Human-readable clause that (k, m, p) violates, or nullopt if admissible.
std::optional<std::string> violated_p_clause(int k, int m, double p);

}  // namespace tia
