// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <utility>

namespace tia {

struct ScalarMax {
  double x;
  double value;
};

/// Golden-section search for the maximum of f on [lo, hi]. Assumes f is
/// unimodal on the bracket; stops once the bracket width falls below
/// rel_tol * max(1, |lo|, |hi|) or after max_iter contractions.
template <class F>
ScalarMax golden_section_maximize(F&& f, double lo, double hi, double rel_tol = 1e-10,
                                  int max_iter = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double scale = std::fmax(1.0, std::fmax(std::fabs(lo), std::fabs(hi)));
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (hi - lo) > rel_tol * scale; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? ScalarMax{c, fc} : ScalarMax{d, fd};
}

}  // namespace tia
