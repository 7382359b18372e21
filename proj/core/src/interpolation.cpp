// SPDX-License-Identifier: Apache-2.0
#include "tia/interpolation.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <Eigen/LU>
#include <Eigen/SVD>

#include "tia/errors.hpp"

namespace tia {

namespace {

using Real = long double;

struct Affine {
  Real c = 0;
  std::array<Real, 3> g{};
};

/// Dense coefficient storage for all exponents of total degree <= k.
class DenseLayout {
public:
  explicit DenseLayout(int k) : k_(k), index_((k + 1) * (k + 1) * (k + 1), -1) {
    for (const auto& e : exponents_up_to_degree(k)) {
      index_[slot(e)] = static_cast<int>(exps_.size());
      exps_.push_back(e);
    }
  }

  [[nodiscard]] std::size_t size() const { return exps_.size(); }
  [[nodiscard]] const Exponent& exponent(std::size_t j) const { return exps_[j]; }

  /// p *= f, where p has degree at most `deg` and deg + 1 <= k.
  void multiply_affine(std::vector<Real>& p, int deg, const Affine& f) const {
    std::vector<Real> out(p.size(), 0);
    for (std::size_t j = 0; j < exps_.size(); ++j) {
      const Real a = p[j];
      if (a == 0) continue;
      const Exponent& e = exps_[j];
      out[j] += f.c * a;
      if (total_degree(e) > deg) continue;
      for (int axis = 0; axis < 3; ++axis) {
        Exponent up = e;
        ++up[static_cast<std::size_t>(axis)];
        out[static_cast<std::size_t>(index_[slot(up)])] += f.g[static_cast<std::size_t>(axis)] * a;
      }
    }
    p.swap(out);
  }

private:
  [[nodiscard]] std::size_t slot(const Exponent& e) const {
    return static_cast<std::size_t>((e[0] * (k_ + 1) + e[1]) * (k_ + 1) + e[2]);
  }

  int k_;
  std::vector<int> index_;
  std::vector<Exponent> exps_;
};

void check_degree(int k) {
  if (k < 1 || k > kMaxInterpolationDegree) {
    std::ostringstream os;
    os << "interpolation degree " << k << " outside 1.." << kMaxInterpolationDegree;
    raise(Errc::ParameterOutOfRange, os.str());
  }
}

}  // namespace

std::vector<MultiIndex4> lattice_indices(int k) {
  check_degree(k);
  std::vector<MultiIndex4> out;
  for (int a1 = 0; a1 <= k; ++a1)
    for (int a2 = 0; a2 <= k - a1; ++a2)
      for (int a3 = 0; a3 <= k - a1 - a2; ++a3) out.push_back({{a1, a2, a3, k - a1 - a2 - a3}});
  return out;
}

std::vector<LatticePoint> lattice_points(const Tetrahedron& k, int degree) {
  std::vector<LatticePoint> out;
  for (const auto& idx : lattice_indices(degree)) {
    LatticePoint lp;
    lp.index = idx;
    lp.point = Point3::Zero();
    for (std::size_t i = 0; i < 4; ++i) {
      lp.barycentric[i] = static_cast<double>(idx.a[i]) / degree;
      lp.point += lp.barycentric[i] * k.vertices()[i];
    }
    out.push_back(lp);
  }
  return out;
}

LagrangeBasisFunction::LagrangeBasisFunction(int k, const MultiIndex4& gamma)
    : k_(k), gamma_(gamma) {
  check_degree(k);
  for (int a : gamma.a)
    if (a < 0) raise(Errc::IndexOrderMismatch, "multi-index entries must be nonnegative");
  if (gamma.order() != k) {
    std::ostringstream os;
    os << "|gamma| = " << gamma.order() << " but k = " << k;
    raise(Errc::IndexOrderMismatch, os.str());
  }
}

double LagrangeBasisFunction::operator()(const Barycentric& lambda) const {
  double value = 1.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (int l = 0; l < gamma_.a[i]; ++l)
      value *= (k_ * lambda[i] - l) / static_cast<double>(gamma_.a[i] - l);
  return value;
}

LagrangeBasisFunction lagrange_basis(int k, const MultiIndex4& gamma) {
  return LagrangeBasisFunction(k, gamma);
}

std::array<MultiPolynomial, 4> barycentric_polynomials(const Tetrahedron& k) {
  const auto& v = k.vertices();
  Mat3 t;
  t.col(0) = v[1] - v[0];
  t.col(1) = v[2] - v[0];
  t.col(2) = v[3] - v[0];
  Eigen::JacobiSVD<Mat3> svd(t);
  const Eigen::Vector3d sv = svd.singularValues();
  if (!(sv(2) > 1e-14 * sv(0)))
    raise(Errc::IllConditioned, "vertex matrix is numerically singular");
  const Mat3 tinv = t.fullPivLu().inverse();
  // (lambda_2, lambda_3, lambda_4) = T^{-1} (x - x1)
  std::array<MultiPolynomial, 4> lambda;
  const Point3 shift = -tinv * v[0];
  MultiPolynomial rest = MultiPolynomial::constant(1.0);
  for (int i = 0; i < 3; ++i) {
    lambda[static_cast<std::size_t>(i + 1)] =
        MultiPolynomial::affine(shift(i), tinv.row(i).transpose());
    rest -= lambda[static_cast<std::size_t>(i + 1)];
  }
  lambda[0] = rest;
  return lambda;
}

Barycentric barycentric_coordinates(const Tetrahedron& k, const Point3& x) {
  const auto& v = k.vertices();
  Mat3 t;
  t.col(0) = v[1] - v[0];
  t.col(1) = v[2] - v[0];
  t.col(2) = v[3] - v[0];
  const Point3 l = t.fullPivLu().solve(x - v[0]);
  return {1.0 - l.sum(), l(0), l(1), l(2)};
}

namespace {

// Expands Lagrange basis functions into Cartesian monomials. The expansion
// cancels heavily on flat elements, so it runs in extended precision and is
// rounded once at the end.
class BasisExpander {
public:
  BasisExpander(const Tetrahedron& k, int degree)
      : degree_(degree), layout_((check_degree(degree), degree)) {
    barycentric_polynomials(k);  // conditioning check
    const auto& v = k.vertices();
    Eigen::Matrix<Real, 3, 3> t;
    for (int c = 0; c < 3; ++c)
      t.col(c) = v[static_cast<std::size_t>(c + 1)].cast<Real>() - v[0].cast<Real>();
    const Eigen::Matrix<Real, 3, 3> tinv = t.inverse();
    const Eigen::Matrix<Real, 3, 1> shift = -tinv * v[0].cast<Real>();
    lambda_[0].c = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      Affine& l = lambda_[i + 1];
      l.c = shift(static_cast<Eigen::Index>(i));
      lambda_[0].c -= l.c;
      for (std::size_t j = 0; j < 3; ++j) {
        l.g[j] = tinv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        lambda_[0].g[j] -= l.g[j];
      }
    }
  }

  [[nodiscard]] const DenseLayout& layout() const { return layout_; }

  /// Coefficients of N_gamma composed with lambda(x).
  void expand(const MultiIndex4& idx, std::vector<Real>& out) const {
    out.assign(layout_.size(), Real(0));
    out[0] = 1;
    int current = 0;
    Real denom = 1;
    for (std::size_t i = 0; i < 4; ++i)
      for (int l = 0; l < idx.a[i]; ++l) {
        Affine f = lambda_[i];
        f.c = f.c * degree_ - l;
        for (auto& g : f.g) g *= degree_;
        layout_.multiply_affine(out, current++, f);
        denom *= idx.a[i] - l;
      }
    for (auto& c : out) c /= denom;
  }

  [[nodiscard]] MultiPolynomial round(const std::vector<Real>& coefs) const {
    MultiPolynomial out;
    for (std::size_t j = 0; j < coefs.size(); ++j)
      if (coefs[j] != 0)
        out += MultiPolynomial::monomial(layout_.exponent(j), static_cast<double>(coefs[j]));
    return out.pruned();
  }

private:
  int degree_;
  DenseLayout layout_;
  std::array<Affine, 4> lambda_{};
};

}  // namespace

std::vector<MultiPolynomial> lagrange_basis_polynomials(const Tetrahedron& k, int degree) {
  const BasisExpander ex(k, degree);
  std::vector<MultiPolynomial> out;
  std::vector<Real> coefs;
  for (const auto& idx : lattice_indices(degree)) {
    ex.expand(idx, coefs);
    out.push_back(ex.round(coefs));
  }
  return out;
}

MultiPolynomial interpolate(const Tetrahedron& k, int degree, const NodalValues& values) {
  const auto indices = lattice_indices(degree);
  for (const auto& idx : indices) {
    if (values.find(idx) == values.end()) {
      std::ostringstream os;
      os << "no value for lattice index (" << idx.a[0] << "," << idx.a[1] << "," << idx.a[2]
         << "," << idx.a[3] << ")";
      raise(Errc::MissingNode, os.str());
    }
  }
  const BasisExpander ex(k, degree);
  std::vector<Real> acc(ex.layout().size(), 0);
  std::vector<Real> basis;
  for (const auto& idx : indices) {
    const double value = values.at(idx);
    if (value == 0.0) continue;
    ex.expand(idx, basis);
    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += static_cast<Real>(value) * basis[j];
  }
  return ex.round(acc);
}

MultiPolynomial interpolate(const Tetrahedron& k, int degree, const MultiPolynomial& v) {
  NodalValues values;
  for (const auto& lp : lattice_points(k, degree)) values[lp.index] = v(lp.point);
  return interpolate(k, degree, values);
}

}  // namespace tia
