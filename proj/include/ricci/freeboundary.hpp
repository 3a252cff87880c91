#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ricci/curve.hpp"

namespace ricci {

// One member of the family of negatively curved rotational surfaces meeting
// the unit sphere orthogonally. In the arc-length parameter t of the profile,
//   f(t) = sqrt(b) sqrt(t^2 + rho(1-rho))   on [-rho, rho],
// and rho solves  b rho + g(rho)^2 = 1  with
//   g(t) = Int_0^t sqrt(((1-b) u^2 + rho(1-rho)) / (u^2 + rho(1-rho))) du.
struct FreeBoundarySolution {
  double b = 0.0;
  double rho = 0.0;
  double neck_radius = 0.0;          // sqrt(b) sqrt(rho(1-rho))
  double residual_boundary = 0.0;    // |b rho + g(rho)^2 - 1|
  double residual_conormal_f = 0.0;  // |f'(rho) - f(rho)|
  double residual_conormal_g = 0.0;  // |g'(rho) - g(rho)|
  bool geodesic_marker = false;      // b = 0: the vertical diameter, rho = 1
};

// Height integral above; odd in t. For b = 1 it equals
// sqrt(rho(1-rho)) asinh(t / sqrt(rho(1-rho))).
double g_hat(double b, double rho, double t, double abs_tol = 1e-12);

// Solves the boundary condition on (0,1) by bracketed root finding to
// |residual| <= 1e-11 and verifies the conormal residuals (<= 1e-8).
FreeBoundarySolution solve_rho(double b);

// Root of (1/sqrt(rho)) sinh(1/sqrt(rho)) = 1/sqrt(1-rho), the b = 1 boundary
// condition in closed form; agrees with solve_rho(1) to 1e-9.
double critical_catenoid_rho();

// Per-b solutions, order preserved; b = 0 yields the geodesic marker. Fans
// out over an index-ordered worker pool (threads = 0: RICCI_ROT_THREADS or
// hardware default).
std::vector<FreeBoundarySolution> family_sweep(std::span<const double> bs, unsigned threads = 0);

struct GaussBonnetAudit {
  double area_integral = 0.0;    // Int K dA = 2 pi Int K(t) f(t) dt
  double boundary_length = 0.0;  // 4 pi f(rho)
};

// The two sides of the total-curvature identity Int K dA = -L(boundary);
// n > 0 pre-splits the quadrature into n panels.
GaussBonnetAudit gauss_bonnet_audit(const FreeBoundarySolution& sol, std::size_t n = 0);

// Profile samples of the solution surface on [-rho, rho] (arc length t).
ProfileCurve freeboundary_profile(const FreeBoundarySolution& sol, std::size_t n);

unsigned default_thread_count();

}  // namespace ricci
