#include "ricci/freeboundary.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "ricci/errors.hpp"
#include "ricci/geometry.hpp"
#include "ricci/interval.hpp"
#include "ricci/numerics/quadrature.hpp"
#include "ricci/numerics/rootfind.hpp"

namespace ricci {

double g_hat(double b, double rho, double t, double abs_tol) {
  if (!(b > 0.0 && b <= 1.0) || !(rho > 0.0 && rho < 1.0))
    fail(Errc::BadParameters, "need 0 < b <= 1 and 0 < rho < 1");
  if (std::abs(t) > rho * (1.0 + 1e-12))
    fail(Errc::BadParameters, "|t| exceeds rho");
  if (t == 0.0) return 0.0;
  if (t < 0.0) return -g_hat(b, rho, -t, abs_tol);  // odd by construction
  const double k2 = rho * (1.0 - rho);
  auto integrand = [b, k2](double u) {
    const double u2 = u * u;
    return std::sqrt(((1.0 - b) * u2 + k2) / (u2 + k2));
  };
  return num::integrate(integrand, 0.0, t, abs_tol);
}

namespace {

double boundary_residual(double b, double rho) {
  const double g = g_hat(b, rho, rho, 1e-12);
  return b * rho + g * g - 1.0;
}

}  // namespace

FreeBoundarySolution solve_rho(double b) {
  if (!(b > 0.0 && b <= 1.0)) fail(Errc::BadParameters, "need 0 < b <= 1");
  auto residual = [b](double rho) { return boundary_residual(b, rho); };
  const double lo = 1e-9, hi = 1.0 - 1e-12;
  if (!(residual(lo) < 0.0) || !(residual(hi) > 0.0))
    fail(Errc::NoRoot, "boundary condition has no sign change on (0,1) for b = " +
                           std::to_string(b));
  const double rho = num::solve_bracketed(
      residual, lo, hi,
      num::RootOptions{.x_rel_tol = 1e-15, .x_abs_tol = 0.0, .f_tol = 1e-12, .max_iter = 300});

  FreeBoundarySolution sol;
  sol.b = b;
  sol.rho = rho;
  const double k2 = rho * (1.0 - rho);
  sol.neck_radius = std::sqrt(b) * std::sqrt(k2);
  sol.residual_boundary = std::abs(residual(rho));
  // f(t) = sqrt(b) sqrt(t^2 + k2): f'(rho) = sqrt(b) rho / sqrt(rho^2 + k2).
  const double f_rho = std::sqrt(b) * std::sqrt(rho * rho + k2);
  const double fp_rho = std::sqrt(b) * rho / std::sqrt(rho * rho + k2);
  sol.residual_conormal_f = std::abs(fp_rho - f_rho);
  const double g_rho = g_hat(b, rho, rho, 1e-12);
  const double gp_rho = std::sqrt(((1.0 - b) * rho * rho + k2) / (rho * rho + k2));
  sol.residual_conormal_g = std::abs(gp_rho - g_rho);
  if (sol.residual_boundary > 1e-11 || sol.residual_conormal_f > 1e-8 ||
      sol.residual_conormal_g > 1e-8)
    fail(Errc::NumericalFailure, "free-boundary residuals out of contract at b = " +
                                     std::to_string(b));
  return sol;
}

double critical_catenoid_rho() {
  auto residual = [](double rho) {
    const double inv = 1.0 / std::sqrt(rho);
    return inv * std::sinh(inv) - 1.0 / std::sqrt(1.0 - rho);
  };
  // Decreasing from +inf toward negative values on (0,1).
  const double rho = num::solve_bracketed(
      residual, 0.05, 0.95,
      num::RootOptions{.x_rel_tol = 1e-15, .x_abs_tol = 1e-15, .f_tol = 0.0, .max_iter = 300});
  if (std::abs(residual(rho)) > 1e-11)
    fail(Errc::NumericalFailure, "sinh-equation residual out of contract");
  return rho;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("RICCI_ROT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min(v, 64L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 8u);
}

std::vector<FreeBoundarySolution> family_sweep(std::span<const double> bs, unsigned threads) {
  for (double b : bs)
    if (!(b >= 0.0 && b <= 1.0)) fail(Errc::BadParameters, "sweep values must lie in [0,1]");

  std::vector<FreeBoundarySolution> out(bs.size());
  std::vector<std::exception_ptr> errors(bs.size());
  auto work = [&](std::size_t i) {
    try {
      if (bs[i] == 0.0) {
        FreeBoundarySolution geo;
        geo.b = 0.0;
        geo.rho = 1.0;
        geo.geodesic_marker = true;
        out[i] = geo;
      } else {
        out[i] = solve_rho(bs[i]);
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const unsigned pool = std::min<std::size_t>(threads ? threads : default_thread_count(),
                                              std::max<std::size_t>(bs.size(), 1));
  if (pool <= 1 || bs.size() <= 1) {
    for (std::size_t i = 0; i < bs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(pool);
    for (unsigned w = 0; w < pool; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < out.size(); i = next.fetch_add(1)) work(i);
      });
    for (auto& th : workers) th.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);  // first failure in input order
  return out;
}

GaussBonnetAudit gauss_bonnet_audit(const FreeBoundarySolution& sol, std::size_t n) {
  if (sol.geodesic_marker) fail(Errc::BadParameters, "the geodesic carries no surface to audit");
  const double b = sol.b, rho = sol.rho;
  const double k2 = rho * (1.0 - rho);
  const double sb = std::sqrt(b);
  // K(t) = -k2 / (t^2 + k2)^2, f(t) = sqrt(b) sqrt(t^2 + k2).
  auto kf = [k2, sb](double t) {
    const double q = t * t + k2;
    return -k2 / (q * q) * sb * std::sqrt(q);
  };
  double integral = 0.0;
  const std::size_t panels = n > 0 ? n : 1;
  const double tol = 1e-12 / double(panels);
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = -rho + 2.0 * rho * double(i) / double(panels);
    const double hi = -rho + 2.0 * rho * double(i + 1) / double(panels);
    integral += num::integrate(kf, lo, hi, tol);
  }
  GaussBonnetAudit audit;
  audit.area_integral = 2.0 * std::numbers::pi * integral;
  audit.boundary_length = 4.0 * std::numbers::pi * sb * std::sqrt(rho * rho + k2);
  return audit;
}

ProfileCurve freeboundary_profile(const FreeBoundarySolution& sol, std::size_t n) {
  if (sol.geodesic_marker) fail(Errc::BadParameters, "the geodesic carries no surface to sample");
  RicciParams p;
  p.a = 0.0;
  p.b = sol.b;
  p.c = 0.0;
  p.d = sol.b * sol.rho * (1.0 - sol.rho);
  DomainInterval iv;
  iv.lo = -sol.rho;
  iv.hi = sol.rho;
  iv.lo_kind = iv.hi_kind = EndpointKind::PolynomialRoot;  // truncated by the sphere, regular
  iv.lo_closed = iv.hi_closed = true;
  return sample_profile(p, iv, n);
}

}  // namespace ricci
