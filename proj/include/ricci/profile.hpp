#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ricci/curve.hpp"
#include "ricci/interval.hpp"
#include "ricci/params.hpp"

namespace ricci {

// ---- closed-form branches -------------------------------------------------

// a = 0 branch: f(s) = sqrt(b s^2 + 2 c s + d).
// Throws NonPositiveRadicand when the radicand is <= 0. No interval checks
// here; the maximal interval is the classifier's business.
double eval_f_case_a0(double b, double c, double d, double s);

// b = 0 branch: unique f > 0 with
//   a f - c log(a f + c)  = a^2 s + d   (Plus,  a f + c > 0)
//   a f - c log(-a f - c) = a^2 s + d   (Minus, a f + c < 0)
// solved by monotone bracketing plus a bisection/secant hybrid to machine
// precision (the contract is 1e-13 relative). Throws NoBracket when no root
// exists for this s on this branch, BranchViolation if the solution lands on
// the wrong sign of a f + c.
double eval_f_case_b0(double a, double c, double d, Branch branch, double s);

struct GeneralEval {
  double s = 0.0;
  double f = 0.0;
};

// General branch (a != 0, b != 0): profile in the auxiliary parameter t,
//   f(t) = a d t exp(-(Phi(t) - Phi(t0))),   s(t) = d exp(-(Phi(t) - Phi(t0))) - c/b,
// where Phi is the closed-form antiderivative of tau / (tau^2 - tau - b/a^2),
// implemented in all three discriminant regimes. Throws SingularInterval when
// [t0, t] contains a root of the denominator, NonPositiveRadius when f <= 0.
GeneralEval eval_general_case(const RicciParams& p, double t0, double t);

// Admissible t-set of the general branch: |a + b/(a t)| <= 1 minus the roots
// of R(t) = t^2 - t - b/a^2 (and t = 0). Endpoint kinds: PolynomialRoot for
// horizontal-tangent bounds, Asymptote at excluded roots of R, Infinite.
struct TInterval {
  double lo, hi;
  EndpointKind lo_kind, hi_kind;
};
std::vector<TInterval> general_admissible_t_intervals(double a, double b);

// Maximal general-branch curve through the gauge point t0. The t-chart covers
// the curve in one or two monotone rays: where an admissible component is
// unbounded, the chart degenerates (s -> -c/b, f -> positive limit as
// |t| -> inf) and for a^2 < 1 the solution continues onto the opposite
// unbounded component, which is glued here with the matching scale.
class GeneralCurve {
 public:
  static GeneralCurve build(const RicciParams& p, double t0);

  ProfilePoint eval(double s) const;  // OutsideDomain outside [s_min, s_max]
  double t_of_s(double s) const;

  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }
  EndpointKind lo_kind() const { return lo_kind_; }
  EndpointKind hi_kind() const { return hi_kind_; }
  bool lo_closed() const { return lo_kind_ == EndpointKind::PolynomialRoot; }
  bool hi_closed() const { return hi_kind_ == EndpointKind::PolynomialRoot; }
  bool glued() const { return rays_.size() == 2; }
  double glue_s() const;  // = -c/b
  double t0() const { return t0_; }
  double sigma() const { return rays_[0].sigma; }
  // t-range of the component containing t0
  double t_lo() const { return rays_[0].t_lo; }
  double t_hi() const { return rays_[0].t_hi; }

  double phi(double t) const;  // exposed for tests

 private:
  struct Ray {
    double t_lo = 0.0, t_hi = 0.0;  // +-inf allowed, open
    double sigma = 0.0;             // w = s + c/b = sigma * exp(-Phi(t)) on the ray
    double t_ref = 0.0, phi_ref = 0.0;
    double s_at_lo = 0.0, s_at_hi = 0.0;  // s-limits toward t_lo / t_hi
    EndpointKind kind_lo = EndpointKind::Infinite, kind_hi = EndpointKind::Infinite;
  };

  double a_ = 0, b_ = 0, c_ = 0, d_ = 0;
  double B_ = 0, delta_ = 0;      // B = b/a^2, delta = 1 + 4B
  double r1_ = 0, r2_ = 0;        // roots of R when delta >= 0
  double lambda_pos_ = 0, lambda_neg_ = 0;
  double t0_ = 0;
  double glue_f_ = 0;             // radius at the chart seam (glued case)
  double glue_wtol_ = 0;          // |s + c/b| below this counts as the seam
  std::vector<Ray> rays_;         // rays_[0] contains t0
  double s_min_ = 0, s_max_ = 0;
  EndpointKind lo_kind_ = EndpointKind::Infinite, hi_kind_ = EndpointKind::Infinite;

  double t_from_phi(const Ray& ray, double phi_star) const;
  ProfilePoint eval_on_ray(const Ray& ray, double s, double w) const;
  friend class GeneralCurveBuilder;
};

// ---- initial value problem --------------------------------------------------

struct IvpOptions {
  double eps_boundary = 1e-8;  // stop when (a x + b s + c)^2 >= (1-eps) x^2 or x <= eps
  double span = 50.0;          // stop when |s - s0| exceeds this
  double tol = 1e-10;          // local error per unit step
  double h_max = 0.25;
  std::size_t max_steps = 1'000'000;  // per direction
};

// Integrates x' = (a x + b s + c)/x in both directions from a seed in Omega,
// carrying the height integral g' = sqrt(1 - x'^2) along. Throws NotInOmega
// when the seed violates x0 > 0, (a x0 + b s0 + c)^2 < x0^2.
ProfileCurve solve_ivp(const RicciParams& p, double s0, double x0, const IvpOptions& opt = {});

}  // namespace ricci
