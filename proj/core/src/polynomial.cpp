// SPDX-License-Identifier: Apache-2.0
#include "tia/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tia/errors.hpp"

namespace tia {

std::vector<Exponent> exponents_of_degree(int d) {
  std::vector<Exponent> out;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
  return out;
}

std::vector<Exponent> exponents_up_to_degree(int d) {
  std::vector<Exponent> out;
  for (int n = 0; n <= d; ++n) {
    auto layer = exponents_of_degree(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

MultiPolynomial::MultiPolynomial(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

MultiPolynomial MultiPolynomial::constant(double c) { return monomial({0, 0, 0}, c); }

MultiPolynomial MultiPolynomial::monomial(const Exponent& e, double coef) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0)
    raise(Errc::ParameterOutOfRange, "monomial exponents must be nonnegative");
  MultiPolynomial p;
  p.add_term(e, coef);
  return p;
}

MultiPolynomial MultiPolynomial::variable(int axis) {
  Exponent e{0, 0, 0};
  e.at(static_cast<std::size_t>(axis)) = 1;
  return monomial(e);
}

MultiPolynomial MultiPolynomial::affine(double c0, const Point3& g) {
  MultiPolynomial p = constant(c0);
  for (int a = 0; a < 3; ++a) p += variable(a) * g(a);
  return p;
}

double MultiPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

int MultiPolynomial::degree() const noexcept {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

double MultiPolynomial::max_abs_coefficient() const noexcept {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double MultiPolynomial::operator()(const Point3& x) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_)
    sum += c * std::pow(x(0), e[0]) * std::pow(x(1), e[1]) * std::pow(x(2), e[2]);
  return sum;
}

MultiPolynomial MultiPolynomial::pruned(double rel_tol) const {
  const double cut = rel_tol * max_abs_coefficient();
  MultiPolynomial out;
  for (const auto& [e, c] : terms_)
    if (std::abs(c) > cut) out.terms_.emplace(e, c);
  return out;
}

void MultiPolynomial::add_term(const Exponent& e, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const MultiPolynomial& o) {
  *this = *this * o;
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  MultiPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

MultiPolynomial pow(const MultiPolynomial& q, int n) {
  if (n < 0) raise(Errc::ParameterOutOfRange, "negative polynomial power");
  MultiPolynomial result = MultiPolynomial::constant(1.0);
  MultiPolynomial base = q;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

MultiPolynomial differentiate(const MultiPolynomial& q, const Exponent& delta) {
  MultiPolynomial::Terms out;
  for (const auto& [e, c] : q.terms()) {
    double coef = c;
    Exponent r = e;
    bool vanishes = false;
    for (std::size_t a = 0; a < 3 && !vanishes; ++a) {
      if (delta[a] > e[a]) {
        vanishes = true;
        break;
      }
      for (int t = 0; t < delta[a]; ++t) coef *= e[a] - t;
      r[a] = e[a] - delta[a];
    }
    if (!vanishes) out[r] += coef;
  }
  return MultiPolynomial(std::move(out));
}

MultiPolynomial compose_affine(const MultiPolynomial& q, const AffineMap& f, int max_degree) {
  const int deg = q.degree();
  if (deg > max_degree) {
    std::ostringstream os;
    os << "degree " << deg << " exceeds composition limit " << max_degree;
    raise(Errc::DegreeOverflow, os.str());
  }
  // powers[a][n] = (row a of F)^n
  std::array<std::vector<MultiPolynomial>, 3> powers;
  for (int a = 0; a < 3; ++a) {
    const MultiPolynomial component =
        MultiPolynomial::affine(f.translation(a), f.linear.row(a).transpose());
    auto& pw = powers[static_cast<std::size_t>(a)];
    pw.push_back(MultiPolynomial::constant(1.0));
    for (int n = 1; n <= deg; ++n) pw.push_back(pw.back() * component);
  }
  MultiPolynomial out;
  for (const auto& [e, c] : q.terms()) {
    out += c * (powers[0][static_cast<std::size_t>(e[0])] *
                powers[1][static_cast<std::size_t>(e[1])] *
                powers[2][static_cast<std::size_t>(e[2])]);
  }
  return out;
}

double max_coefficient_difference(const MultiPolynomial& a, const MultiPolynomial& b) {
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, std::abs(c - b.coefficient(e)));
  for (const auto& [e, c] : b.terms())
    if (a.terms().find(e) == a.terms().end()) m = std::max(m, std::abs(c));
  return m;
}

PolynomialEvaluator::PolynomialEvaluator(const MultiPolynomial& q) {
  for (const auto& [e, c] : q.terms()) {
    exps_.push_back(e);
    coefs_.push_back(c);
    max_power_ = std::max({max_power_, e[0], e[1], e[2]});
  }
}

double PolynomialEvaluator::operator()(const Point3& x) const {
  constexpr int kStack = 32;
  double table[3][kStack];
  const int n = std::min(max_power_, kStack - 1);
  for (int a = 0; a < 3; ++a) {
    table[a][0] = 1.0;
    for (int p = 1; p <= n; ++p) table[a][p] = table[a][p - 1] * x(a);
  }
  double sum = 0.0;
  for (std::size_t t = 0; t < exps_.size(); ++t) {
    const auto& e = exps_[t];
    const double px = e[0] <= n ? table[0][e[0]] : std::pow(x(0), e[0]);
    const double py = e[1] <= n ? table[1][e[1]] : std::pow(x(1), e[1]);
    const double pz = e[2] <= n ? table[2][e[2]] : std::pow(x(2), e[2]);
    sum += coefs_[t] * px * py * pz;
  }
  return sum;
}

}  // namespace tia
