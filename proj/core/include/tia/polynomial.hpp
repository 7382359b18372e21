// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <vector>

#include "tia/geometry.hpp"

namespace tia {

/// Exponent triple (i, j, l) of x^i y^j z^l.
using Exponent = std::array<int, 3>;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

/// All exponents with |e| == d, in lexicographically descending order
/// (x^d first, z^d last).
std::vector<Exponent> exponents_of_degree(int d);
/// All exponents with |e| <= d, grouped by degree.
std::vector<Exponent> exponents_up_to_degree(int d);

/// Trivariate polynomial in the monomial basis. Exact zeros are never
/// stored; `pruned` drops float dust relative to the largest coefficient.
class MultiPolynomial {
public:
  using Terms = std::map<Exponent, double>;

  MultiPolynomial() = default;
  explicit MultiPolynomial(Terms terms);

  static MultiPolynomial constant(double c);
  static MultiPolynomial monomial(const Exponent& e, double coef = 1.0);
  /// axis 0, 1, 2 -> x, y, z
  static MultiPolynomial variable(int axis);
  /// c0 + g . x
  static MultiPolynomial affine(double c0, const Point3& g);

  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] double coefficient(const Exponent& e) const;
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  /// Largest |e| over stored terms; 0 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept;
  [[nodiscard]] double max_abs_coefficient() const noexcept;

  [[nodiscard]] double operator()(const Point3& x) const;

  /// Drops coefficients with |c| <= rel_tol * max|c|.
  [[nodiscard]] MultiPolynomial pruned(double rel_tol = 1e-14) const;

  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator-=(const MultiPolynomial& o);
  MultiPolynomial& operator*=(double s);
  MultiPolynomial& operator*=(const MultiPolynomial& o);

  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(MultiPolynomial a, double s) { return a *= s; }
  friend MultiPolynomial operator*(double s, MultiPolynomial a) { return a *= s; }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  friend MultiPolynomial operator-(MultiPolynomial a) { return a *= -1.0; }
  friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

private:
  void add_term(const Exponent& e, double c);
  Terms terms_;
};

MultiPolynomial pow(const MultiPolynomial& q, int n);

/// Formal partial derivative d^delta q.
MultiPolynomial differentiate(const MultiPolynomial& q, const Exponent& delta);

inline constexpr int kMaxComposeDegree = 12;

/// q(F(x)); throws DegreeOverflow when deg q > max_degree.
MultiPolynomial compose_affine(const MultiPolynomial& q, const AffineMap& f,
                               int max_degree = kMaxComposeDegree);

/// Largest coefficient difference |a_e - b_e| over the union of supports.
double max_coefficient_difference(const MultiPolynomial& a, const MultiPolynomial& b);

/// Flattened form for repeated evaluation.
class PolynomialEvaluator {
public:
  explicit PolynomialEvaluator(const MultiPolynomial& q);
  [[nodiscard]] double operator()(const Point3& x) const;

private:
  std::vector<Exponent> exps_;
  std::vector<double> coefs_;
  int max_power_ = 0;
};

}  // namespace tia
