#include "ricci/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/numerics/ode.hpp"
#include "ricci/numerics/rootfind.hpp"

namespace ricci {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

// ---- a = 0 ------------------------------------------------------------------

double eval_f_case_a0(double b, double c, double d, double s) {
  const double q = (b * s + 2.0 * c) * s + d;
  if (!(q > 0.0))
    fail(Errc::NonPositiveRadicand,
         "b s^2 + 2 c s + d = " + std::to_string(q) + " at s = " + std::to_string(s));
  return std::sqrt(q);
}

// ---- b = 0 ------------------------------------------------------------------

double eval_f_case_b0(double a, double c, double d, Branch branch, double s) {
  if (a == 0.0 || c == 0.0) fail(Errc::BadParameters, "b = 0 branch needs a != 0 and c != 0");

  // Radius domain where the branch sign of a f + c holds.
  double f_lo = 0.0, f_hi = kInf;
  bool lo_divergent = false;  // G has a log blow-up at f_lo
  if (branch == Branch::Plus) {
    if (a > 0.0) {
      if (c < 0.0) {
        f_lo = -c / a;
        lo_divergent = true;
      }
    } else {
      if (c <= 0.0) fail(Errc::NoBracket, "empty plus-branch domain (a < 0, c <= 0)");
      f_hi = -c / a;
    }
  } else {
    if (a < 0.0) {
      if (c > 0.0) {
        f_lo = -c / a;
        lo_divergent = true;
      }
    } else {
      if (c >= 0.0) fail(Errc::NoBracket, "empty minus-branch domain (a > 0, c >= 0)");
      f_hi = -c / a;
    }
  }

  // G(f) = a f - c log(+-(a f + c));  s = (G(f) - d)/a^2.
  auto G = [&](double f) {
    const double w = a * f + c;
    return a * f - c * std::log(branch == Branch::Plus ? w : -w);
  };
  // G is increasing on Plus, decreasing on Minus; orient the residual upward.
  const double sgn = branch == Branch::Plus ? 1.0 : -1.0;
  const double y = a * a * s + d;
  auto resid = [&](double f) { return sgn * (G(f) - y); };

  const double scale = std::max(1.0, std::abs(c / a));
  double seed = std::isfinite(f_hi) ? f_lo + 0.5 * (f_hi - f_lo) : f_lo + scale;
  const double r_seed = resid(seed);

  double lo = seed, hi = seed;
  if (r_seed < 0.0) {
    // March up toward f_hi. The upper end always diverges (+inf after
    // orientation), whether it is the log singularity at -c/a or f -> inf.
    double t = seed, rt = r_seed;
    if (std::isfinite(f_hi)) {
      double gap = f_hi - seed;
      for (int k = 0; k < 1400 && rt < 0.0; ++k) {
        gap *= 0.5;
        t = f_hi - gap;
        if (t == f_hi) break;
        rt = resid(t);
      }
    } else {
      double step = scale;
      for (int k = 0; k < 300 && rt < 0.0; ++k) {
        t = seed + step;
        rt = resid(t);
        step *= 2.0;
      }
    }
    if (rt < 0.0) fail(Errc::NumericalFailure, "upper end failed to bracket");
    hi = t;
  } else if (r_seed > 0.0) {
    // March down toward f_lo. A log-divergent lower end always brackets; the
    // f -> 0 end has a finite one-sided limit, beyond which no root exists.
    double t = seed, rt = r_seed;
    double gap = seed - f_lo;
    for (int k = 0; k < 1400 && rt > 0.0; ++k) {
      gap *= 0.5;
      t = f_lo + gap;
      if (t == f_lo || gap < 1e-300) break;
      rt = resid(t);
    }
    if (rt > 0.0) {
      if (lo_divergent) fail(Errc::NumericalFailure, "divergent end failed to bracket");
      fail(Errc::NoBracket, "s outside the branch image (target beyond the f -> 0 limit)");
    }
    lo = t;
  }

  const double f =
      lo == hi ? lo
               : num::solve_bracketed(resid, lo, hi,
                                      num::RootOptions{.x_rel_tol = 4e-16, .x_abs_tol = 0.0,
                                                       .f_tol = 0.0, .max_iter = 300});
  const double w = a * f + c;
  if ((branch == Branch::Plus && !(w > 0.0)) || (branch == Branch::Minus && !(w < 0.0)))
    fail(Errc::BranchViolation, "solved radius lies on the wrong sign of a f + c");
  return f;
}

// ---- general case -----------------------------------------------------------

namespace {

// Closed-form antiderivative Phi(t) of t / R(t), R(t) = t^2 - t - B, in the
// three discriminant regimes of delta = 1 + 4B.
struct PhiParts {
  double B, delta, r1 = 0, r2 = 0, A1 = 0, A2 = 0, q = 0;

  PhiParts(double a, double b) {
    B = b / (a * a);
    delta = 1.0 + 4.0 * B;
    if (std::abs(delta) <= 1e-13 * (1.0 + std::abs(4.0 * B))) delta = 0.0;
    if (delta > 0.0) {
      const double sq = std::sqrt(delta);
      r1 = 0.5 * (1.0 - sq);
      r2 = 0.5 * (1.0 + sq);
      A1 = -r1 / sq;
      A2 = r2 / sq;
    } else if (delta == 0.0) {
      r1 = r2 = 0.5;
    } else {
      q = 0.5 * std::sqrt(-delta);
    }
  }

  double R(double t) const { return (t - 1.0) * t - B; }

  double phi(double t) const {
    if (delta > 0.0) return A1 * std::log(std::abs(t - r1)) + A2 * std::log(std::abs(t - r2));
    if (delta == 0.0) return std::log(std::abs(t - 0.5)) - 0.5 / (t - 0.5);
    return 0.5 * std::log(R(t)) + (0.5 / q) * std::atan((t - 0.5) / q);
  }

  // lim (phi(t) - log|t|) toward +inf (dir > 0) or -inf.
  double lambda(int dir) const {
    if (delta < 0.0) return (dir > 0 ? 1.0 : -1.0) * std::numbers::pi / (4.0 * q);
    return 0.0;
  }

  // Divergence sign of phi at a root of R approached from side (+1: from
  // above, -1: from below). +1 means phi -> +inf.
  int phi_root_limit(double root, int side) const {
    if (delta > 0.0) {
      const double coef = (root == r1) ? A1 : A2;
      return coef > 0.0 ? -1 : +1;
    }
    return side > 0 ? -1 : +1;
  }

  bool has_real_roots() const { return delta >= 0.0; }
};

}  // namespace

GeneralEval eval_general_case(const RicciParams& p, double t0, double t) {
  if (p.a == 0.0 || p.b == 0.0) fail(Errc::BadParameters, "general case needs a != 0 and b != 0");
  if (p.d == 0.0) fail(Errc::NonPositiveRadius, "d = 0 collapses the profile scale");
  const PhiParts ph(p.a, p.b);
  const double lo = std::min(t0, t), hi = std::max(t0, t);
  if (ph.has_real_roots()) {
    for (double r : {ph.r1, ph.r2})
      if (r >= lo && r <= hi)
        fail(Errc::SingularInterval, "root of t^2 - t - b/a^2 at t = " + std::to_string(r) +
                                         " inside [" + std::to_string(lo) + ", " +
                                         std::to_string(hi) + "]");
  }
  const double e = std::exp(ph.phi(t0) - ph.phi(t));
  GeneralEval out;
  out.s = p.d * e - p.c / p.b;
  out.f = p.a * p.d * t * e;
  if (!(out.f > 0.0))
    fail(Errc::NonPositiveRadius, "f = " + std::to_string(out.f) + " at t = " + std::to_string(t));
  return out;
}

std::vector<TInterval> general_admissible_t_intervals(double a, double b) {
  if (a == 0.0 || b == 0.0) fail(Errc::BadParameters, "general case needs a != 0 and b != 0");
  const double u = b / a;
  const PhiParts ph(a, b);

  struct Bp {
    double t;
    EndpointKind kind;
  };
  std::vector<Bp> bps;
  if (a != 1.0) bps.push_back({u / (1.0 - a), EndpointKind::PolynomialRoot});
  if (a != -1.0) bps.push_back({-u / (1.0 + a), EndpointKind::PolynomialRoot});
  bps.push_back({0.0, EndpointKind::RadicandZero});
  if (ph.has_real_roots()) {
    bps.push_back({ph.r1, EndpointKind::Asymptote});
    if (ph.r2 != ph.r1) bps.push_back({ph.r2, EndpointKind::Asymptote});
  }
  std::sort(bps.begin(), bps.end(), [](const Bp& x, const Bp& y) { return x.t < y.t; });
  // A tangent bound can coincide with a root of R (K -> 0 there); the root
  // behaviour governs the limit, so its kind wins the merge.
  std::vector<Bp> merged;
  for (const Bp& bp : bps) {
    if (!merged.empty() && merged.back().t == bp.t) {
      if (bp.kind == EndpointKind::Asymptote) merged.back().kind = bp.kind;
      continue;
    }
    merged.push_back(bp);
  }
  bps = std::move(merged);

  auto admissible = [&](double t) { return std::abs(a + u / t) <= 1.0; };

  double far = 2.0;
  for (const Bp& bp : bps) far = std::max(far, 2.0 * std::abs(bp.t) + 2.0);

  std::vector<TInterval> out;
  const std::size_t nb = bps.size();
  for (std::size_t seg = 0; seg <= nb; ++seg) {
    const double lo = seg == 0 ? -kInf : bps[seg - 1].t;
    const double hi = seg == nb ? kInf : bps[seg].t;
    if (lo == hi) continue;
    const double rep = seg == 0 ? -far : (seg == nb ? far : 0.5 * (lo + hi));
    if (!admissible(rep)) continue;
    TInterval ti;
    ti.lo = lo;
    ti.hi = hi;
    ti.lo_kind = seg == 0 ? EndpointKind::Infinite : bps[seg - 1].kind;
    ti.hi_kind = seg == nb ? EndpointKind::Infinite : bps[seg].kind;
    out.push_back(ti);
  }
  return out;
}

// ---- GeneralCurve -----------------------------------------------------------

class GeneralCurveBuilder {
 public:
  static GeneralCurve run(const RicciParams& p, double t0) {
    if (p.a == 0.0 || p.b == 0.0) fail(Errc::BadParameters, "general case needs a != 0, b != 0");
    if (p.d == 0.0) fail(Errc::NoSurface, "d = 0 collapses the profile scale");
    if (t0 == 0.0 || !(p.a * p.d * t0 > 0.0))
      fail(Errc::NonPositiveRadius, "gauge point t0 must satisfy a d t0 > 0");

    GeneralCurve gc;
    gc.a_ = p.a;
    gc.b_ = p.b;
    gc.c_ = p.c;
    gc.d_ = p.d;
    const PhiParts ph(p.a, p.b);
    gc.B_ = ph.B;
    gc.delta_ = ph.delta;
    gc.r1_ = ph.r1;
    gc.r2_ = ph.r2;
    gc.lambda_pos_ = ph.lambda(+1);
    gc.lambda_neg_ = ph.lambda(-1);
    gc.t0_ = t0;

    const auto comps = general_admissible_t_intervals(p.a, p.b);
    const TInterval* home = nullptr;
    for (const auto& c : comps)
      if (t0 > c.lo && t0 < c.hi) home = &c;
    if (!home) fail(Errc::OutsideDomain, "t0 = " + std::to_string(t0) + " not admissible");

    const double sigma0 = p.d * std::exp(ph.phi(t0));
    gc.rays_.push_back(make_ray(gc, ph, *home, sigma0));

    // Glue across the chart seam (s -> -c/b as |t| -> inf) when the home
    // component is unbounded. For a^2 = 1 the seam is a genuine barrier and
    // for a^2 > 1 unbounded components do not occur.
    const bool lo_inf = std::isinf(home->lo);
    const bool hi_inf = std::isinf(home->hi);
    if ((lo_inf || hi_inf) && std::abs(p.a) < 1.0) {
      const int dir = hi_inf ? +1 : -1;
      const TInterval* mate = nullptr;
      for (const auto& c : comps) {
        if (dir > 0 && std::isinf(c.lo)) mate = &c;
        if (dir < 0 && std::isinf(c.hi)) mate = &c;
      }
      if (!mate) fail(Errc::NumericalFailure, "missing companion component for a^2 < 1");
      const double lam_home = dir > 0 ? gc.lambda_pos_ : gc.lambda_neg_;
      const double lam_mate = dir > 0 ? gc.lambda_neg_ : gc.lambda_pos_;
      gc.glue_f_ = (dir > 0 ? 1.0 : -1.0) * p.a * sigma0 * std::exp(-lam_home);
      if (!(gc.glue_f_ > 0.0)) fail(Errc::NumericalFailure, "non-positive radius at chart seam");
      gc.glue_wtol_ = 1e-12 * std::abs(sigma0) * std::exp(-lam_home);
      const double sigma1 = -sigma0 * std::exp(lam_mate - lam_home);
      gc.rays_.push_back(make_ray(gc, ph, *mate, sigma1));
    }

    double smin = kInf, smax = -kInf;
    EndpointKind kmin = EndpointKind::Infinite, kmax = EndpointKind::Infinite;
    for (const auto& r : gc.rays_) {
      for (int side = 0; side < 2; ++side) {
        const double sv = side == 0 ? r.s_at_lo : r.s_at_hi;
        const EndpointKind kd = side == 0 ? r.kind_lo : r.kind_hi;
        if (gc.rays_.size() == 2 && kd == EndpointKind::Barrier) continue;  // interior seam
        if (sv <= smin) {
          smin = sv;
          kmin = kd;
        }
        if (sv >= smax) {
          smax = sv;
          kmax = kd;
        }
      }
    }
    gc.s_min_ = smin;
    gc.s_max_ = smax;
    gc.lo_kind_ = kmin;
    gc.hi_kind_ = kmax;
    return gc;
  }

 private:
  static GeneralCurve::Ray make_ray(GeneralCurve& gc, const PhiParts& ph, const TInterval& comp,
                                    double sigma) {
    GeneralCurve::Ray ray;
    ray.t_lo = comp.lo;
    ray.t_hi = comp.hi;
    ray.sigma = sigma;
    if (std::isinf(comp.lo) && std::isinf(comp.hi))
      fail(Errc::NumericalFailure, "component cannot span the origin");
    if (std::isinf(comp.lo))
      ray.t_ref = comp.hi - std::max(1.0, std::abs(comp.hi));
    else if (std::isinf(comp.hi))
      ray.t_ref = comp.lo + std::max(1.0, std::abs(comp.lo));
    else
      ray.t_ref = 0.5 * (comp.lo + comp.hi);
    ray.phi_ref = ph.phi(ray.t_ref);

    const double cb = gc.c_ / gc.b_;
    auto end_limit = [&](double te, EndpointKind kind, int side_from, double& s_out,
                         EndpointKind& kind_out) {
      if (std::isinf(te)) {
        s_out = -cb;  // chart seam
        kind_out = EndpointKind::Barrier;
        return;
      }
      switch (kind) {
        case EndpointKind::PolynomialRoot:  // horizontal tangent, attainable
          s_out = sigma * std::exp(-ph.phi(te)) - cb;
          kind_out = EndpointKind::PolynomialRoot;
          return;
        case EndpointKind::Asymptote: {  // root of R
          if (ph.phi_root_limit(te, side_from) > 0) {
            s_out = -cb;  // w -> 0: the radius pinches off
            kind_out = EndpointKind::RadicandZero;
          } else {
            s_out = sigma > 0 ? kInf : -kInf;
            kind_out = EndpointKind::Infinite;
          }
          return;
        }
        default:
          fail(Errc::NumericalFailure, "unexpected t-endpoint kind");
      }
    };
    // t_lo is approached from above (+1), t_hi from below (-1).
    end_limit(comp.lo, comp.lo_kind, +1, ray.s_at_lo, ray.kind_lo);
    end_limit(comp.hi, comp.hi_kind, -1, ray.s_at_hi, ray.kind_hi);
    return ray;
  }
};

GeneralCurve GeneralCurve::build(const RicciParams& p, double t0) {
  return GeneralCurveBuilder::run(p, t0);
}

double GeneralCurve::phi(double t) const { return PhiParts(a_, b_).phi(t); }

double GeneralCurve::glue_s() const { return -c_ / b_; }

double GeneralCurve::t_from_phi(const Ray& ray, double phi_star) const {
  const PhiParts ph(a_, b_);
  auto res = [&](double t) { return ph.phi(t) - phi_star; };
  const double r_ref = res(ray.t_ref);
  if (r_ref == 0.0) return ray.t_ref;

  const double dphi = ray.t_ref / ph.R(ray.t_ref);
  const bool toward_hi = (phi_star > ray.phi_ref) == (dphi > 0.0);
  const double te = toward_hi ? ray.t_hi : ray.t_lo;

  double prev = ray.t_ref, rprev = r_ref;
  double probe = prev;
  bool bracketed = false;
  if (std::isinf(te)) {
    double step = std::max(1.0, std::abs(ray.t_ref));
    for (int k = 0; k < 1200; ++k) {
      probe = prev + (toward_hi ? step : -step);
      if (std::abs(probe) > 1e130) break;
      const double rp = res(probe);
      if (rp == 0.0) return probe;
      if ((rp > 0.0) != (rprev > 0.0)) {
        bracketed = true;
        break;
      }
      prev = probe;
      rprev = rp;
      step *= 2.0;
    }
  } else {
    double r_end = res(te);
    if (r_end == 0.0) return te;
    if ((r_end > 0.0) != (r_ref > 0.0)) {
      probe = te;
      bracketed = true;
    } else if (ph.has_real_roots() && (te == r1_ || te == r2_)) {
      // Divergent end: halve the gap until the sign flips.
      double gap = te - prev;
      for (int k = 0; k < 1400; ++k) {
        gap *= 0.5;
        probe = te - gap;
        if (probe == prev || probe == te) break;
        const double rp = res(probe);
        if (rp == 0.0) return probe;
        if ((rp > 0.0) != (rprev > 0.0)) {
          bracketed = true;
          break;
        }
        prev = probe;
        rprev = rp;
      }
    } else {
      // Tangent end with the target just past it (endpoint roundoff): allow a
      // small extension, the chart stays regular a bit beyond the bound.
      double margin = 1e-6 * (1.0 + std::abs(te));
      for (double r : {r1_, r2_, 0.0}) {  // never reach a chart singularity
        if (ph.has_real_roots() || r == 0.0) {
          const double gapr = toward_hi ? r - te : te - r;
          if (gapr > 0.0) margin = std::min(margin, 0.5 * gapr);
        }
      }
      const double ext = toward_hi ? te + margin : te - margin;
      const double r_ext = res(ext);
      if ((r_ext > 0.0) != (r_ref > 0.0)) {
        prev = te;
        rprev = r_end;
        probe = ext;
        bracketed = true;
      }
    }
  }
  if (!bracketed) fail(Errc::OutsideDomain, "arc length outside the chart range");
  const double lo = std::min(prev, probe), hi = std::max(prev, probe);
  return num::solve_bracketed(
      res, lo, hi,
      num::RootOptions{.x_rel_tol = 1e-15, .x_abs_tol = 1e-300, .f_tol = 0.0, .max_iter = 300});
}

ProfilePoint GeneralCurve::eval_on_ray(const Ray& ray, double /*s*/, double w) const {
  const double t = t_from_phi(ray, -std::log(w / ray.sigma));
  ProfilePoint out;
  out.f = a_ * t * w;
  out.fp = a_ + b_ / (a_ * t);
  return out;
}

double GeneralCurve::t_of_s(double s) const {
  const double w = s + c_ / b_;
  for (const auto& ray : rays_) {
    if (w != 0.0 && (w > 0.0) == (ray.sigma > 0.0))
      return t_from_phi(ray, -std::log(w / ray.sigma));
  }
  fail(Errc::OutsideDomain, "no chart ray covers s = " + std::to_string(s));
}

ProfilePoint GeneralCurve::eval(double s) const {
  const double slack = 1e-9 * (1.0 + std::abs(s));
  if (s < s_min_ - slack || s > s_max_ + slack)
    fail(Errc::OutsideDomain, "s = " + std::to_string(s) + " outside the maximal interval");
  const double w = s + c_ / b_;
  if (rays_.size() == 2 && std::abs(w) <= glue_wtol_) return {glue_f_, a_};
  for (const auto& ray : rays_) {
    if (w != 0.0 && (w > 0.0) == (ray.sigma > 0.0)) return eval_on_ray(ray, s, w);
  }
  fail(Errc::OutsideDomain, "s = " + std::to_string(s) + " outside the chart range");
}

// ---- IVP --------------------------------------------------------------------

ProfileCurve solve_ivp(const RicciParams& p, double s0, double x0, const IvpOptions& opt) {
  if (!in_omega(p, s0, x0))
    fail(Errc::NotInOmega, "seed (s0, x0) = (" + std::to_string(s0) + ", " + std::to_string(x0) +
                               ") violates x > 0, (a x + b s + c)^2 < x^2");

  num::OdeRhs<2> rhs = [&p](double s, const std::array<double, 2>& y) {
    const double xp = (p.a * y[0] + p.b * s + p.c) / y[0];
    const double gap = 1.0 - xp * xp;
    return std::array<double, 2>{xp, gap > 0.0 ? std::sqrt(gap) : 0.0};
  };
  auto event = [&p, &opt](double s, const std::array<double, 2>& y) {
    if (y[0] <= opt.eps_boundary) return true;
    const double w = p.a * y[0] + p.b * s + p.c;
    return w * w >= (1.0 - opt.eps_boundary) * y[0] * y[0];
  };

  num::IntegrateOptions<2> iopt;
  iopt.tol = opt.tol;
  iopt.h_max = opt.h_max;
  iopt.max_steps = opt.max_steps;
  iopt.error_components = 1;  // g rides along, x drives the step size

  struct Run {
    std::vector<ProfileSample> samples;
    IvpStop stop;
  };
  auto run_dir = [&](double s_end) {
    Run run;
    auto sink = [&](double s, const std::array<double, 2>& y) {
      ProfileSample ps;
      ps.s = s;
      ps.f = y[0];
      ps.fp = (p.a * y[0] + p.b * s + p.c) / y[0];
      ps.g = y[1];
      const CurvatureSample cs = curvature_sample(p, s, y[0]);
      ps.K = cs.K;
      ps.residual = cs.residual;
      if (!cs.horizontal) ps.H = cs.H;
      run.samples.push_back(ps);
    };
    const auto outcome = num::integrate_ode<2>(rhs, s0, {x0, 0.0}, s_end, iopt, event, sink);
    const ProfileSample& last = run.samples.back();
    run.stop.s = last.s;
    run.stop.f = last.f;
    switch (outcome) {
      case num::OdeOutcome::ReachedEnd:
        run.stop.reason = StopReason::SpanExhausted;
        break;
      case num::OdeOutcome::StepLimit:
        run.stop.reason = StopReason::StepLimit;
        break;
      case num::OdeOutcome::EventFired:
        run.stop.reason =
            last.f <= opt.eps_boundary ? StopReason::RadiusCollapse : StopReason::BoundaryTangent;
        break;
    }
    return run;
  };

  Run right = run_dir(s0 + opt.span);
  Run left = run_dir(s0 - opt.span);

  ProfileCurve curve;
  curve.params = p;
  curve.s0_anchor = s0;
  curve.stop_left = left.stop;
  curve.stop_right = right.stop;
  curve.samples.reserve(left.samples.size() + right.samples.size());
  for (auto it = left.samples.rbegin(); it != left.samples.rend(); ++it) {
    if (it + 1 == left.samples.rend()) break;  // the seed reappears in the right run
    curve.samples.push_back(*it);
  }
  for (const auto& ps : right.samples) curve.samples.push_back(ps);

  for (const auto& ps : curve.samples) {
    const double r = std::abs(ps.f * ps.fp - (p.a * ps.f + p.b * ps.s + p.c));
    if (!(r <= 1e-9 * std::max(1.0, ps.f)))
      fail(Errc::NumericalFailure, "ODE residual " + std::to_string(r) + " out of contract");
  }
  return curve;
}

}  // namespace ricci
