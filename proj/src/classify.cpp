#include "ricci/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "ricci/errors.hpp"

namespace ricci {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// Sign of x*y - z*w with an fma-compensated product difference, so that the
// discriminant decisions are exact for representable inputs.
double diff_of_products(double x, double y, double z, double w) {
  const double zw = z * w;
  const double err = std::fma(z, w, -zw);
  return std::fma(x, y, -zw) - err;
}

}  // namespace

const char* case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::FlatCylinder: return "FlatCylinder";
    case CaseTag::FlatCone: return "FlatCone";
    case CaseTag::FlatPlane: return "FlatPlane";
    case CaseTag::CatenoidalRicci: return "CatenoidalRicci";
    case CaseTag::NegativeA0Bounded: return "NegativeA0Bounded";
    case CaseTag::PositiveA0: return "PositiveA0";
    case CaseTag::FunnelRicci: return "FunnelRicci";
    case CaseTag::NegativeB0Bounded: return "NegativeB0Bounded";
    case CaseTag::PositiveB0: return "PositiveB0";
    case CaseTag::GeneralCase: return "GeneralCase";
  }
  return "?";
}

const char* k_sign_name(KSign k) {
  switch (k) {
    case KSign::Negative: return "Negative";
    case KSign::Zero: return "Zero";
    case KSign::Positive: return "Positive";
  }
  return "?";
}

DomainInterval maximal_interval_a0(double b, double c, double d) {
  if (b == 0.0 && c == 0.0) fail(Errc::Degenerate, "b = c = 0 has a constant profile");
  DomainInterval iv;
  const double disc = diff_of_products(c, c, b, d);  // c^2 - b d, sign of K
  if (b == 0.0) {
    // P(s) = 2 c s - c^2 + d, K > 0 throughout.
    const double sP = (c * c - d) / (2.0 * c);
    if (c > 0.0) {
      iv.lo = sP;
      iv.lo_kind = EndpointKind::PolynomialRoot;
      iv.lo_closed = true;
    } else {
      iv.hi = sP;
      iv.hi_kind = EndpointKind::PolynomialRoot;
      iv.hi_closed = true;
    }
    return iv;
  }
  if (disc == 0.0) {
    // Affine profile sqrt(b) |s + c/b|; only slopes below 1 carry a surface.
    if (b < 0.0 || b > 1.0) fail(Errc::NoSurface, "affine profile with |slope| > 1");
    iv.lo = -c / b;
    iv.lo_kind = EndpointKind::RadicandZero;
    iv.lo_closed = false;
    return iv;  // right ray by convention
  }
  if (disc < 0.0) {  // K < 0
    if (b <= 0.0) fail(Errc::NoSurface, "c^2 < b d with b < 0 leaves no positive radicand");
    if (b <= 1.0) return iv;  // whole line
    const double rad = std::sqrt(-disc / (b - 1.0));
    iv.lo = (-c - rad) / b;
    iv.hi = (-c + rad) / b;
    iv.lo_kind = iv.hi_kind = EndpointKind::PolynomialRoot;
    iv.lo_closed = iv.hi_closed = true;
    return iv;
  }
  // K > 0
  if (b >= 1.0) fail(Errc::NoSurface, "c^2 > b d needs b < 1");
  const double rad = std::sqrt(disc / (1.0 - b));  // = sqrt((bd-c^2)/(b-1))
  const double sA = (-c - rad) / b, sB = (-c + rad) / b;
  const double s1 = std::min(sA, sB), s2 = std::max(sA, sB);
  if (b < 0.0) {
    iv.lo = s1;
    iv.hi = s2;
    iv.lo_kind = iv.hi_kind = EndpointKind::PolynomialRoot;
    iv.lo_closed = iv.hi_closed = true;
    return iv;
  }
  // 0 < b < 1: two half-lines; report the right component.
  iv.lo = s2;
  iv.lo_kind = EndpointKind::PolynomialRoot;
  iv.lo_closed = true;
  return iv;
}

std::vector<TInterval> general_case_J(double a, double b) {
  return general_admissible_t_intervals(a, b);
}

namespace {

void note_marginal(ClassificationReport& rep, double value, double scale, const char* what) {
  if (value != 0.0 && std::abs(value) <= 1e-12 * std::max(1.0, scale)) {
    rep.marginal = true;
    rep.notes.push_back(std::string("marginal: |") + what + "| within 1e-12 of zero");
  }
}

ClassificationReport classify_a0(const RicciParams& p) {
  ClassificationReport rep;
  rep.params = p;
  const double b = p.b, c = p.c, d = p.d;

  if (b == 0.0 && c == 0.0) {
    if (!(d > 0.0)) fail(Errc::NoSurface, "constant profile needs d > 0");
    rep.case_tag = CaseTag::FlatCylinder;
    rep.k_sign = KSign::Zero;
    rep.interval = DomainInterval::all();
    rep.complete = true;
    rep.descriptors["radius"] = std::sqrt(d);
    return rep;
  }

  const double disc = diff_of_products(c, c, b, d);  // c^2 - b d
  note_marginal(rep, disc, std::max(c * c, std::abs(b * d)), "c^2 - b d");

  if (disc == 0.0) {
    // f = sqrt(b) |s + c/b| (b != 0 here since b = 0 forces c = 0 above).
    if (b < 0.0 || b > 1.0) fail(Errc::NoSurface, "affine profile with |slope| > 1");
    rep.interval = maximal_interval_a0(b, c, d);
    const double m = std::sqrt(b);
    rep.k_sign = KSign::Zero;
    if (b == 1.0) {
      rep.case_tag = CaseTag::FlatPlane;
      rep.descriptors["cone_slope"] = m;
    } else {
      rep.case_tag = CaseTag::FlatCone;
      rep.descriptors["cone_slope"] = m;
      rep.descriptors["cone_angle"] = 2.0 * std::atan(m / std::sqrt(1.0 - b));
      rep.descriptors["cone_vertex_s"] = -c / b;
    }
    rep.notes.push_back("flat degeneration: c^2 = b d");
    return rep;
  }

  rep.interval = maximal_interval_a0(b, c, d);  // throws NoSurface on empty combos
  if (disc < 0.0) {
    rep.k_sign = KSign::Negative;
    rep.descriptors["neck_radius"] = std::sqrt(-disc / b);
    rep.descriptors["neck_s"] = -c / b;
    if (b <= 1.0) {
      rep.case_tag = CaseTag::CatenoidalRicci;
      rep.complete = true;
      rep.descriptors["catenoid"] = b == 1.0 ? 1.0 : 0.0;
    } else {
      rep.case_tag = CaseTag::NegativeA0Bounded;
      rep.descriptors["s1"] = rep.interval.lo;
      rep.descriptors["s2"] = rep.interval.hi;
    }
    return rep;
  }
  rep.k_sign = KSign::Positive;
  rep.case_tag = CaseTag::PositiveA0;
  if (b != 0.0) {
    const double rad = std::sqrt(disc / (1.0 - b));
    rep.descriptors["s1"] = std::min((-c - rad) / b, (-c + rad) / b);
    rep.descriptors["s2"] = std::max((-c - rad) / b, (-c + rad) / b);
    if (b > 0.0) rep.notes.push_back("two admissible components; right one reported");
  }
  return rep;
}

ClassificationReport classify_b0(const RicciParams& p) {
  ClassificationReport rep;
  rep.params = p;
  const double a = p.a, c = p.c, d = p.d;

  if (c == 0.0) {
    // f' = a: an affine profile (the admissibility gate already excluded
    // |a| >= 1 when c = 0).
    rep.case_tag = CaseTag::FlatCone;
    rep.k_sign = KSign::Zero;
    rep.descriptors["cone_slope"] = a;
    rep.descriptors["cone_angle"] = 2.0 * std::atan(std::abs(a) / std::sqrt(1.0 - a * a));
    rep.descriptors["cone_vertex_s"] = -d / a;
    if (a > 0.0) {
      rep.interval.lo = -d / a;
      rep.interval.lo_kind = EndpointKind::RadicandZero;
    } else {
      rep.interval.hi = -d / a;
      rep.interval.hi_kind = EndpointKind::RadicandZero;
    }
    return rep;
  }

  note_marginal(rep, c, std::abs(a), "c");
  note_marginal(rep, std::abs(a) - 1.0, 1.0, "|a| - 1");

  const bool plus = p.branch == Branch::Plus;
  // Branch feasibility: {f > 0 : sign(a f + c) matches} must be nonempty.
  if (plus && a < 0.0 && c <= 0.0) fail(Errc::NoSurface, "plus branch empty for a < 0, c <= 0");
  if (!plus && a > 0.0 && c >= 0.0) fail(Errc::NoSurface, "minus branch empty for a > 0, c >= 0");

  const double k_sig = plus ? c : -c;  // sign of K = c (a f + c)/f^4 on the branch
  const double asym = -c / a;

  // Arc length where |f'| = 1 on the branch: f* = c/(1-a) (plus) or
  // -c/(1+a) (minus); s0 follows by substitution into the implicit equation.
  auto tangent_s = [&](double fstar) {
    const double w = a * fstar + c;
    return (a * fstar - c * std::log(plus ? w : -w) - d) / (a * a);
  };

  if (k_sig < 0.0) {
    rep.k_sign = KSign::Negative;
    rep.descriptors["asymptote"] = asym;
    const bool complete = std::abs(a) <= 1.0;
    if (complete) {
      rep.case_tag = CaseTag::FunnelRicci;
      rep.complete = true;
      rep.interval = DomainInterval::all();
    } else {
      rep.case_tag = CaseTag::NegativeB0Bounded;
      const double fstar = plus ? c / (1.0 - a) : -c / (1.0 + a);
      const double s0 = tangent_s(fstar);
      rep.descriptors["s0"] = s0;
      rep.descriptors["f_at_s0"] = fstar;
      if (plus) {  // a > 1: I = (-inf, s0]
        rep.interval.hi = s0;
        rep.interval.hi_kind = EndpointKind::PolynomialRoot;
        rep.interval.hi_closed = true;
      } else {  // a < -1: I = [s0, +inf)
        rep.interval.lo = s0;
        rep.interval.lo_kind = EndpointKind::PolynomialRoot;
        rep.interval.lo_closed = true;
      }
    }
    return rep;
  }

  rep.k_sign = KSign::Positive;
  rep.case_tag = CaseTag::PositiveB0;
  const double fstar = plus ? c / (1.0 - a) : -c / (1.0 + a);
  const double s0 = tangent_s(fstar);
  rep.descriptors["s0"] = s0;
  rep.descriptors["f_at_s0"] = fstar;
  // The radius stays below -c/a exactly when that bound is on the branch.
  if ((plus && a < 0.0) || (!plus && a > 0.0)) rep.descriptors["asymptote"] = asym;
  if (plus) {  // c > 0, a < 1: I = [s0, +inf)
    rep.interval.lo = s0;
    rep.interval.lo_kind = EndpointKind::PolynomialRoot;
    rep.interval.lo_closed = true;
  } else {  // c < 0, a > -1: I = (-inf, s0]
    rep.interval.hi = s0;
    rep.interval.hi_kind = EndpointKind::PolynomialRoot;
    rep.interval.hi_closed = true;
  }
  return rep;
}

double pick_general_t0(const RicciParams& p) {
  const auto comps = general_admissible_t_intervals(p.a, p.b);
  const double side = p.a * p.d;  // need sign(t) = sign(a d)
  double best = 0.0;
  double best_abs = kInf;
  for (const auto& c : comps) {
    double rep;
    if (std::isinf(c.lo) && std::isinf(c.hi)) continue;
    if (std::isinf(c.lo))
      rep = c.hi - std::max(1.0, std::abs(c.hi));
    else if (std::isinf(c.hi))
      rep = c.lo + std::max(1.0, std::abs(c.lo));
    else
      rep = 0.5 * (c.lo + c.hi);
    if (!(rep * side > 0.0)) continue;
    if (std::abs(rep) < best_abs) {
      best_abs = std::abs(rep);
      best = rep;
    }
  }
  if (best == 0.0)
    fail(Errc::NoSurface, "no admissible t-component on the sign side of a*d");
  return best;
}

ClassificationReport classify_general(const RicciParams& p, std::optional<double> t0_opt,
                                      std::shared_ptr<GeneralCurve>* out_curve) {
  ClassificationReport rep;
  rep.params = p;
  if (p.d == 0.0) fail(Errc::NoSurface, "d = 0 collapses the profile scale");

  const double t0 = t0_opt ? *t0_opt : pick_general_t0(p);
  auto curve = std::make_shared<GeneralCurve>(GeneralCurve::build(p, t0));

  rep.case_tag = CaseTag::GeneralCase;
  const double B = p.b / (p.a * p.a);
  const double delta = 1.0 + 4.0 * B;
  note_marginal(rep, delta, std::abs(4.0 * B), "1 + 4 b/a^2");
  note_marginal(rep, std::abs(p.a) - 1.0, 1.0, "|a| - 1");
  rep.descriptors["B"] = B;
  rep.descriptors["t0"] = t0;
  rep.descriptors["sigma"] = curve->sigma();
  rep.descriptors["t_lo"] = curve->t_lo();
  rep.descriptors["t_hi"] = curve->t_hi();
  if (delta >= 0.0) {
    rep.descriptors["t1"] = 0.5 * (1.0 - std::sqrt(std::max(0.0, delta)));
    rep.descriptors["t2"] = 0.5 * (1.0 + std::sqrt(std::max(0.0, delta)));
  }
  if (curve->glued()) {
    rep.descriptors["s_glue"] = curve->glue_s();
    rep.notes.push_back("chart seam at s = -c/b glued to the companion component");
  }
  if (std::abs(p.a) == 1.0)
    rep.notes.push_back("a^2 = 1: the s-barrier -c/b bounds the profile");

  // K = -(b/(a^2 d^2 t^4)) R(t) exp(2 Int): sign(-b R) on the component.
  const double t_probe = curve->t0();
  const double R = (t_probe - 1.0) * t_probe - B;
  rep.k_sign = (-p.b * R) > 0.0 ? KSign::Positive : KSign::Negative;

  rep.interval.lo = curve->s_min();
  rep.interval.hi = curve->s_max();
  rep.interval.lo_kind = curve->lo_kind();
  rep.interval.hi_kind = curve->hi_kind();
  rep.interval.lo_closed = curve->lo_closed();
  rep.interval.hi_closed = curve->hi_closed();
  rep.complete = rep.interval.whole_line();
  if (out_curve) *out_curve = curve;
  return rep;
}

}  // namespace

ClassificationReport classify(const RicciParams& p, std::optional<double> t0) {
  if (const char* sub = excluded_subset_name(p.a, p.b, p.c))
    fail(Errc::Inadmissible, std::string("(a,b,c) in ") + sub);
  if (p.a == 0.0) return classify_a0(p);
  if (p.b == 0.0) return classify_b0(p);
  return classify_general(p, t0, nullptr);
}

std::optional<FlatInfo> detect_flat(const ProfileCurve& curve) {
  const auto& ss = curve.samples;
  if (ss.size() < 2) return std::nullopt;
  const auto& first = ss.front();
  const auto& last = ss.back();
  const double m = (last.f - first.f) / (last.s - first.s);
  const double r0 = first.f - m * first.s;  // f = m s + r0
  double fmax = 0.0, dev = 0.0;
  for (const auto& ps : ss) {
    fmax = std::max(fmax, std::abs(ps.f));
    dev = std::max(dev, std::abs(ps.f - (m * ps.s + r0)));
  }
  if (dev > 1e-10 * std::max(1.0, fmax)) return std::nullopt;

  FlatInfo info;
  info.m = m;
  info.r = r0;
  if (std::abs(m) <= 1e-12) {
    info.tag = CaseTag::FlatCylinder;
    info.m = 0.0;
    return info;
  }
  if (std::abs(std::abs(m) - 1.0) <= 1e-12) {
    info.tag = CaseTag::FlatPlane;
    return info;
  }
  info.tag = CaseTag::FlatCone;
  const double am = std::abs(m);
  info.phi = 2.0 * std::atan(am / std::sqrt(1.0 - m * m));
  const double f_anchor = m * curve.s0_anchor + r0;
  info.vertex = -(std::sqrt(1.0 - m * m) / m) * f_anchor;
  return info;
}

ResolvedProfile resolve_profile(const RicciParams& p, std::optional<double> t0) {
  ResolvedProfile rp;
  if (const char* sub = excluded_subset_name(p.a, p.b, p.c))
    fail(Errc::Inadmissible, std::string("(a,b,c) in ") + sub);

  if (p.a == 0.0) {
    rp.report = classify_a0(p);
    const double b = p.b, c = p.c, d = p.d;
    rp.eval = [b, c, d](double s) {
      const double f = eval_f_case_a0(b, c, d, s);
      return ProfilePoint{f, (b * s + c) / f};
    };
    return rp;
  }
  if (p.b == 0.0) {
    rp.report = classify_b0(p);
    if (p.c == 0.0) {
      const double a = p.a, d = p.d;
      rp.eval = [a, d](double s) {
        const double f = a * s + d;
        if (!(f > 0.0)) fail(Errc::NonPositiveRadius, "affine profile radius <= 0");
        return ProfilePoint{f, a};
      };
    } else {
      const RicciParams q = p;
      rp.eval = [q](double s) {
        const double f = eval_f_case_b0(q.a, q.c, q.d, q.branch, s);
        return ProfilePoint{f, (q.a * f + q.c) / f};
      };
    }
    return rp;
  }
  std::shared_ptr<GeneralCurve> curve;
  rp.report = classify_general(p, t0, &curve);
  rp.eval = [curve](double s) { return curve->eval(s); };
  return rp;
}

}  // namespace ricci
