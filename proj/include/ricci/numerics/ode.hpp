#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "ricci/errors.hpp"

namespace ricci::num {

// Dormand-Prince 5(4) embedded pair with proportional-integral step control.
// State is a fixed-size array; the error norm is taken over a caller-selected
// subset of components so that auxiliary quantities (e.g. an accumulated
// height integral) can ride along without driving the step size.

template <std::size_t N>
struct OdeStep {
  double s;
  std::array<double, N> y;
};

template <std::size_t N>
using OdeRhs = std::function<std::array<double, N>(double, const std::array<double, N>&)>;

namespace detail {
inline constexpr double dp_c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
inline constexpr double dp_a[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
inline constexpr double dp_b5[7] = {35.0 / 384,     0.0,        500.0 / 1113, 125.0 / 192,
                                    -2187.0 / 6784, 11.0 / 84,  0.0};
inline constexpr double dp_e[7] = {71.0 / 57600,       0.0,        -71.0 / 16695, 71.0 / 1920,
                                   -17253.0 / 339200,  22.0 / 525, -1.0 / 40};
}  // namespace detail

// One DP5 step of size h from (s,y). Returns the 5th-order solution and the
// embedded error estimate per component.
template <std::size_t N>
std::pair<std::array<double, N>, std::array<double, N>> dp5_step(const OdeRhs<N>& rhs, double s,
                                                                 const std::array<double, N>& y,
                                                                 double h) {
  std::array<std::array<double, N>, 7> k;
  k[0] = rhs(s, y);
  for (int stage = 1; stage < 7; ++stage) {
    std::array<double, N> yy = y;
    for (int j = 0; j < stage; ++j) {
      const double aij = detail::dp_a[stage][j];
      if (aij == 0.0) continue;
      for (std::size_t n = 0; n < N; ++n) yy[n] += h * aij * k[j][n];
    }
    k[stage] = rhs(s + detail::dp_c[stage] * h, yy);
  }
  std::array<double, N> y5 = y, err{};
  for (int stage = 0; stage < 7; ++stage) {
    for (std::size_t n = 0; n < N; ++n) {
      y5[n] += h * detail::dp_b5[stage] * k[stage][n];
      err[n] += h * detail::dp_e[stage] * k[stage][n];
    }
  }
  return {y5, err};
}

template <std::size_t N>
struct IntegrateOptions {
  double tol = 1e-10;              // local error per unit step, relative to max(1,|y|)
  double h_init = 1e-3;
  double h_max = 0.1;
  std::size_t max_steps = 1'000'000;
  std::size_t error_components = N;  // error norm uses components [0, error_components)
};

enum class OdeOutcome { ReachedEnd, EventFired, StepLimit };

// Integrate from s0 toward s_end (either direction). `event` is evaluated at
// every accepted point; when it returns true the crossing is localized by
// bisection on the step size and integration stops there. `sink` receives
// every accepted point including the initial and final one.
template <std::size_t N>
OdeOutcome integrate_ode(const OdeRhs<N>& rhs, double s0, std::array<double, N> y0, double s_end,
                         const IntegrateOptions<N>& opt,
                         const std::function<bool(double, const std::array<double, N>&)>& event,
                         const std::function<void(double, const std::array<double, N>&)>& sink) {
  const double dir = (s_end >= s0) ? 1.0 : -1.0;
  double s = s0;
  std::array<double, N> y = y0;
  sink(s, y);
  if (event && event(s, y)) return OdeOutcome::EventFired;
  double h = std::min(opt.h_init, opt.h_max);
  double err_prev = 1.0;
  std::size_t steps = 0;
  while (dir * (s_end - s) > 0.0) {
    if (++steps > opt.max_steps) return OdeOutcome::StepLimit;
    h = std::min(h, dir * (s_end - s));
    h = std::max(h, 1e-14 * std::max(1.0, std::abs(s)));
    auto [y_new, err] = dp5_step<N>(rhs, s, y, dir * h);
    // Error per unit step, scaled by max(1,|y|).
    double norm = 0.0;
    for (std::size_t n = 0; n < opt.error_components; ++n) {
      const double sc = std::max(1.0, std::max(std::abs(y[n]), std::abs(y_new[n])));
      norm = std::max(norm, std::abs(err[n]) / sc);
    }
    norm /= h * opt.tol;
    if (norm <= 1.0 || h <= 1e-13 * std::max(1.0, std::abs(s))) {
      // Accept. Localize an event crossing inside the step if needed.
      if (event && event(s + dir * h, y_new)) {
        double h_lo = 0.0, h_hi = h;
        auto y_hi = y_new;
        for (int it = 0; it < 80 && (h_hi - h_lo) > 1e-15 * std::max(1.0, h); ++it) {
          const double h_mid = 0.5 * (h_lo + h_hi);
          auto [y_mid, e2] = dp5_step<N>(rhs, s, y, dir * h_mid);
          (void)e2;
          if (event(s + dir * h_mid, y_mid)) {
            h_hi = h_mid;
            y_hi = y_mid;
          } else {
            h_lo = h_mid;
          }
        }
        s += dir * h_hi;
        y = y_hi;
        sink(s, y);
        return OdeOutcome::EventFired;
      }
      s += dir * h;
      y = y_new;
      sink(s, y);
      // PI controller (order 5): factor from current and previous error.
      const double e = std::max(norm, 1e-10);
      double fac = 0.9 * std::pow(e, -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
      fac = std::clamp(fac, 0.2, 5.0);
      h = std::min(h * fac, opt.h_max);
      err_prev = e;
    } else {
      h *= std::max(0.2, 0.9 * std::pow(norm, -1.0 / 5.0));
    }
  }
  return OdeOutcome::ReachedEnd;
}

}  // namespace ricci::num
