#pragma once

#include <span>
#include <string>
#include <vector>

#include "ricci/curve.hpp"

namespace ricci {

// Aggregated finite-difference / brute-force validation of a generating
// curve. All residual fields are maxima over the checked samples; `pass`
// applies the documented thresholds.
struct ValidationReport {
  double max_ode_residual = 0.0;        // |f f' - (a f + b s + c)|, FD f' on the curve's own grid
  double max_ricci_residual_closed = 0.0;  // scale-free, closed-form derivatives
  double max_ricci_residual_fd = 0.0;      // scale-free, K', K'' by central differences (h = 1e-4)
  double max_arclength_violation = 0.0;    // |f'^2 + g'^2 - 1|, FD g'
  double max_K_fd_error = 0.0;             // |(-f''/f) - K| on a uniform resample
  bool sign_constant = true;
  bool pass = true;
  std::vector<std::string> notes;
};

// -f''/f by central second differences on a uniformly spaced (s, f) list;
// values at the n-2 interior points. Throws TooFewSamples below 5 points.
std::vector<double> fd_gauss_K(std::span<const double> s, std::span<const double> f);

// Residuals of 4K = (log(-K))'' + (f'/f)(log(-K))' by central differences at
// the interior points of uniformly spaced samples. Throws NonNegativeK when
// any K >= 0.
std::vector<double> fd_log_condition(std::span<const double> K, std::span<const double> f,
                                     double h);

// Runs the whole battery: FD checks on the curve's own grid plus a uniform
// resample through the closed-form evaluators of the curve's parameters.
ValidationReport validate_curve(const ProfileCurve& curve);

}  // namespace ricci
