// Independent test oracles: deliberately simple implementations that share no
// code with the library paths they check.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Classic fixed-step RK4 for x' = F(s, x).
inline double rk4(const std::function<double(double, double)>& F, double s0, double x0,
                  double s_end, int steps) {
  const double h = (s_end - s0) / steps;
  double s = s0, x = x0;
  for (int i = 0; i < steps; ++i) {
    const double k1 = F(s, x);
    const double k2 = F(s + 0.5 * h, x + 0.5 * h * k1);
    const double k3 = F(s + 0.5 * h, x + 0.5 * h * k2);
    const double k4 = F(s + h, x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    s += h;
  }
  return x;
}

// Plain bisection for a continuous function with a sign change on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Adaptive Simpson quadrature.
inline double simpson_rec(const std::function<double(double)>& f, double lo, double hi, double flo,
                          double fmid, double fhi, double whole, double tol, int depth) {
  const double mid = 0.5 * (lo + hi);
  const double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
  const double flm = f(lm), frm = f(rm);
  const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
  const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
  if (depth > 50 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson_rec(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth + 1) +
         simpson_rec(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth + 1);
}

inline double simpson(const std::function<double(double)>& f, double lo, double hi,
                      double tol = 1e-11) {
  if (lo == hi) return 0.0;
  const double mid = 0.5 * (lo + hi);
  const double flo = f(lo), fmid = f(mid), fhi = f(hi);
  const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
  return simpson_rec(f, lo, hi, flo, fmid, fhi, whole, tol, 0);
}

// Central-difference stencils on a callable.
inline double d1(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}
inline double d2(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace oracles
