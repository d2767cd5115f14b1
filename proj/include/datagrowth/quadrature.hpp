#pragma once

#include <cmath>
#include <utility>

#include "datagrowth/errors.hpp"

namespace datagrowth {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_floor = 1e-12;
  int max_depth = 60;
};

namespace detail {

inline double simpson(double h, double fa, double fm, double fb) {
  return (fa + 4.0 * fm + fb) * (h / 6.0);
}

template <class F>
double adapt(F& f, double a, double m, double b, double fa, double fm, double fb, double whole,
             double tol, int depth, int max_depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  if (!std::isfinite(flm) || !std::isfinite(frm)) {
    throw DomainError("quadrature: integrand not finite inside interval");
  }
  const double left = simpson(m - a, fa, flm, fm);
  const double right = simpson(b - m, fm, frm, fb);
  const double err = left + right - whole;
  if (depth >= max_depth || std::abs(err) <= 15.0 * tol) {
    return left + right + err / 15.0;
  }
  return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction. Serves as the independent
// oracle for the closed-form antiderivatives.
template <class F>
double integrate_adaptive_simpson(F&& f, double a, double b, QuadratureOptions opts = {}) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb)) {
    throw DomainError("quadrature: integrand not finite at initial nodes");
  }
  const double whole = detail::simpson(b - a, fa, fm, fb);
  const double tol = std::max(opts.abs_floor, opts.rel_tol * std::abs(whole));
  return detail::adapt(f, a, m, b, fa, fm, fb, whole, tol, 0, opts.max_depth);
}

}  // namespace datagrowth
