// SPDX-License-Identifier: Apache-2.0
#include "tia/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "tia/errors.hpp"
#include "tia/interpolation.hpp"
#include "tia/parallel.hpp"
#include "tia/projection.hpp"
#include "tia/random.hpp"

namespace tia {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_positive_grid(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) raise(Errc::ParameterOutOfRange, std::string(what) + " grid is empty");
  for (double g : grid)
    if (!(g > 0) || !std::isfinite(g))
      raise(Errc::ParameterOutOfRange, std::string(what) + " grid values must be positive");
}

std::string monomial_id(const Exponent& e) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "mono_%d%d%d", e[0], e[1], e[2]);
  return buf;
}

void require_admissible(int k, int m, double p) {
  if (auto clause = violated_p_clause(k, m, p)) {
    std::ostringstream os;
    os << "(k, m, p) = (" << k << ", " << m << ", " << p << "): " << *clause;
    raise(Errc::InvalidPForKM, os.str());
  }
}

}  // namespace

Tetrahedron sliver(double h, double alpha_exponent) {
  if (!(h > 0) || !(alpha_exponent > 0))
    raise(Errc::ParameterOutOfRange, "sliver requires h > 0 and alpha > 0");
  const double lift = std::pow(h, alpha_exponent);
  return Tetrahedron::from_vertices(
      {Point3(h, 0, 0), Point3(-h, 0, 0), Point3(0, -h, lift), Point3(0, h, lift)});
}

MultiPolynomial sliver_v1(double h, double alpha_exponent) {
  return MultiPolynomial::monomial({2, 0, 0}) - MultiPolynomial::constant(h * h) +
         MultiPolynomial::monomial({0, 0, 1}, std::pow(h, 2.0 - alpha_exponent));
}

std::vector<FamilyElement> make_family(const ElementFamily& family) {
  std::vector<FamilyElement> out;
  std::visit(
      overloaded{
          [&](const SliverFamily& s) {
            if (!(s.alpha_exponent > 0))
              raise(Errc::ParameterOutOfRange, "sliver exponent must be positive");
            require_positive_grid(family.parameter_grid, "sliver h");
            for (double h : family.parameter_grid) out.push_back({sliver(h, s.alpha_exponent), h});
          },
          [&](const SqueezedFamily& s) {
            require_positive_grid(family.parameter_grid, "squeeze b");
            const Tetrahedron& ref =
                s.which == ReferenceKind::hat ? reference_hat() : reference_tilde();
            for (double b : family.parameter_grid) out.push_back({squeeze1(s.a, b)(ref), b});
          },
          [&](const NeedleFamily& s) {
            require_positive_grid(family.parameter_grid, "needle thickness");
            for (double eps : family.parameter_grid)
              out.push_back({squeeze2(s.length, eps, eps)(reference_hat()), eps});
          },
          [&](const RandomFamily& s) {
            if (s.count < 0) raise(Errc::ParameterOutOfRange, "random count must be >= 0");
            Rng rng(s.seed);
            for (int i = 0; i < s.count; ++i)
              out.push_back({random_tetrahedron(rng), static_cast<double>(i)});
          },
      },
      family.kind);
  return out;
}

std::string family_name(const ElementFamily& family) {
  return std::visit(overloaded{
                        [](const SliverFamily&) { return std::string("sliver"); },
                        [](const SqueezedFamily&) { return std::string("squeezed"); },
                        [](const NeedleFamily&) { return std::string("needle"); },
                        [](const RandomFamily&) { return std::string("random"); },
                    },
                    family.kind);
}

double family_kind_param(const ElementFamily& family) {
  return std::visit(overloaded{
                        [](const SliverFamily& s) { return s.alpha_exponent; },
                        [](const SqueezedFamily& s) { return s.a; },
                        [](const NeedleFamily& s) { return s.length; },
                        [](const RandomFamily& s) { return static_cast<double>(s.seed); },
                    },
                    family.kind);
}

std::vector<BatteryFunction> function_battery(int k, std::uint64_t seed,
                                              std::optional<SliverParams> sliver_data) {
  if (k < 1 || k > kMaxBatteryDegree)
    raise(Errc::ParameterOutOfRange, "battery degree k must be in 1..4");
  std::vector<BatteryFunction> out;
  for (const auto& e : exponents_of_degree(k + 1))
    out.push_back({monomial_id(e), MultiPolynomial::monomial(e)});

  Rng rng(seed);
  const auto exps = exponents_up_to_degree(k + 1);
  for (int r = 0; r < kBatteryRandomCount; ++r) {
    MultiPolynomial::Terms terms;
    for (const auto& e : exps) terms[e] = rng.uniform(-1.0, 1.0);
    char id[16];
    std::snprintf(id, sizeof id, "rand_%02d", r);
    out.push_back({id, MultiPolynomial(std::move(terms))});
  }
  if (k == 1 && sliver_data)
    out.push_back({"v1", sliver_v1(sliver_data->h, sliver_data->alpha_exponent)});
  return out;
}

ElementMeasures measure_element(const Tetrahedron& k) {
  ElementMeasures m;
  m.h_K = diameter(k);
  const SphereRadii r = inradius_circumradius(k);
  m.rho_K = r.rho;
  m.R_sphere = r.R_sphere;
  m.R_K = projected_circumradius(k).R_K;
  return m;
}

ErrorRatioRecord error_ratio(const Tetrahedron& tet, const MultiPolynomial& v, int k, int m,
                             double p, const SeminormOptions& opts) {
  require_admissible(k, m, p);
  return error_ratio(tet, measure_element(tet), v, k, m, p, opts);
}

ErrorRatioRecord error_ratio(const Tetrahedron& tet, const ElementMeasures& measures,
                             const MultiPolynomial& v, int k, int m, double p,
                             const SeminormOptions& opts) {
  require_admissible(k, m, p);
  ErrorRatioRecord rec;
  rec.k = k;
  rec.m = m;
  rec.p = p;
  rec.h_K = measures.h_K;
  rec.rho_K = measures.rho_K;
  rec.R_sphere = measures.R_sphere;
  rec.R_K = measures.R_K;
  rec.degree_warning = v.degree() > k + 1;

  const MultiPolynomial error = v - interpolate(tet, k, v);
  rec.error_seminorm = seminorm(tet, error, {m, p}, opts);
  rec.data_seminorm = seminorm(tet, v, {k + 1, p}, opts);

  if (rec.data_seminorm == 0.0) {
    // v lies in P_k: the interpolant reproduces it and only rounding is left.
    const double reference = std::max({seminorm(tet, v, {m, p}, opts),
                                       seminorm(tet, v, {0, p}, opts) / std::pow(rec.h_K, m),
                                       std::numeric_limits<double>::min()});
    if (rec.error_seminorm > 1e-8 * reference)
      raise(Errc::ZeroDataSeminorm, "|v|_{k+1,p} vanishes but the interpolation error does not");
    rec.error_seminorm = 0.0;
    return rec;
  }
  const double scale = std::pow(rec.h_K, k + 1 - 2 * m) * rec.data_seminorm;
  rec.ratio_projected = rec.error_seminorm / (std::pow(rec.R_K, m) * scale);
  rec.ratio_naive = rec.error_seminorm / (std::pow(rec.R_sphere, m) * scale);
  return rec;
}

SweepResult bound_sweep(const ElementFamily& family, int k, int m, double p, std::uint64_t seed,
                        unsigned threads) {
  require_admissible(k, m, p);
  const auto elements = make_family(family);
  const std::string name = family_name(family);
  const double kind_param = family_kind_param(family);
  const auto* sliver_kind = std::get_if<SliverFamily>(&family.kind);

  std::vector<ElementMeasures> measures(elements.size());
  parallel_for(elements.size(), threads,
               [&](std::size_t i) { measures[i] = measure_element(elements[i].tet); });

  std::vector<std::vector<BatteryFunction>> batteries;
  for (const auto& el : elements) {
    std::optional<SliverParams> sp;
    if (sliver_kind) sp = SliverParams{el.h_param, sliver_kind->alpha_exponent};
    batteries.push_back(function_battery(k, seed, sp));
  }

  struct Task {
    std::size_t element;
    std::size_t function;
  };
  std::vector<Task> tasks;
  for (std::size_t e = 0; e < elements.size(); ++e)
    for (std::size_t f = 0; f < batteries[e].size(); ++f) tasks.push_back({e, f});

  SweepResult result;
  result.records.resize(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t t) {
    const Task& task = tasks[t];
    const auto& el = elements[task.element];
    const auto& fn = batteries[task.element][task.function];
    ErrorRatioRecord rec = error_ratio(el.tet, measures[task.element], fn.poly, k, m, p);
    rec.family_kind = name;
    rec.kind_param = kind_param;
    rec.h_param = el.h_param;
    rec.function_id = fn.id;
    result.records[t] = std::move(rec);
  });

  result.per_element.resize(elements.size());
  for (std::size_t e = 0; e < elements.size(); ++e) result.per_element[e].h_param = elements[e].h_param;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto& agg = result.per_element[tasks[t].element];
    agg.max_ratio_projected = std::max(agg.max_ratio_projected, result.records[t].ratio_projected);
    agg.max_ratio_naive = std::max(agg.max_ratio_naive, result.records[t].ratio_naive);
  }
  return result;
}

double b_lower_bound(const Tetrahedron& tet, int k, int m, double p, std::uint64_t seed) {
  require_admissible(k, m, p);
  double best = 0.0;
  for (const auto& fn : function_battery(k, seed)) {
    const double data = seminorm(tet, fn.poly, {k + 1, p});
    if (data == 0.0) continue;
    const double err = seminorm(tet, fn.poly - interpolate(tet, k, fn.poly), {m, p});
    best = std::max(best, err / data);
  }
  return best;
}

std::vector<RejectionRow> sliver_rejection_demo(double alpha_exponent,
                                                const std::vector<double>& h_grid) {
  if (!(alpha_exponent > 2))
    raise(Errc::ParameterOutOfRange, "the rejection regime needs alpha > 2");
  require_positive_grid(h_grid, "sliver h");
  std::vector<RejectionRow> rows;
  for (double h : h_grid) {
    const Tetrahedron k = sliver(h, alpha_exponent);
    const MultiPolynomial v1 = sliver_v1(h, alpha_exponent);
    const MultiPolynomial interp = interpolate(k, 1, v1);
    RejectionRow row;
    row.h = h;
    row.error = seminorm_sup(k, v1 - interp, 1);
    row.R_sphere = inradius_circumradius(k).R_sphere;
    row.R_K = projected_circumradius(k).R_K;
    row.naive_quotient = row.error / row.R_sphere;
    row.projected_quotient = row.error / row.R_K;
    row.interpolant_max_coef = interp.max_abs_coefficient();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tia
