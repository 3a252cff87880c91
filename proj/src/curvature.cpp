#include "ricci/curvature.hpp"

#include <cmath>

#include "ricci/errors.hpp"

namespace ricci {

double gauss_K(const RicciParams& p, double s, double f) {
  const double u = p.b * s + p.c;
  const double f2 = f * f;
  return (u * u + p.a * f * u - p.b * f2) / (f2 * f2);
}

double gauss_Kp(const RicciParams& p, double s, double f, double K) {
  const double u = p.b * s + p.c;
  return (3.0 * p.a * f + 4.0 * u) / (f * f) * K;
}

KDerivs gauss_K_derivs(const RicciParams& p, double s, double f, double K) {
  const double u = p.b * s + p.c;
  const double f2 = f * f;
  KDerivs d;
  d.Kp = (3.0 * p.a * f + 4.0 * u) / f2 * K;
  d.Kpp = (24.0 * u * u + 35.0 * p.a * u * f + 4.0 * (3.0 * p.a * p.a - p.b) * f2) / (f2 * f2) * K;
  return d;
}

double mean_H(const RicciParams& p, double s, double f) {
  const double w = p.a * f + p.b * s + p.c;
  const double f2 = f * f;
  const double gap = f2 - w * w;
  if (!(gap > 1e-12 * f2)) fail(Errc::HorizontalTangent, "mean curvature undefined at |f'| -> 1");
  return ((p.b - 1.0) * f + p.a * w) / (2.0 * f * std::sqrt(gap));
}

PrincipalCurvatures principal_curvatures(double f, double fp, double fpp, double gp, double gpp) {
  const double viol = std::abs(fp * fp + gp * gp - 1.0);
  if (viol > 1e-10) fail(Errc::ArcLengthViolation, "f'^2 + g'^2 != 1 (violation " + std::to_string(viol) + ")");
  return {-gp / f, gp * fpp - gpp * fp};
}

double ricci_residual(double K, double Kp, double Kpp, double f, double fp) {
  return K * Kpp - Kp * Kp - 4.0 * K * K * K + (fp / f) * K * Kp;
}

double ricci_residual_normalized(double K, double Kp, double Kpp, double f, double fp) {
  const double raw = ricci_residual(K, Kp, Kpp, f, fp);
  const double aK = std::abs(K);
  const double scale = K * K * (std::abs(Kpp) + Kp * Kp + aK * aK * aK + 1.0);
  return std::abs(raw) / std::max(1.0, scale);
}

CurvatureSample curvature_sample(const RicciParams& p, double s, double f) {
  CurvatureSample cs;
  cs.s = s;
  cs.K = gauss_K(p, s, f);
  const KDerivs d = gauss_K_derivs(p, s, f, cs.K);
  cs.Kp = d.Kp;
  cs.Kpp = d.Kpp;
  const double w = p.a * f + p.b * s + p.c;
  const double fp = w / f;
  cs.residual = ricci_residual_normalized(cs.K, cs.Kp, cs.Kpp, f, fp);
  const double gap = 1.0 - fp * fp;
  if (gap > 1e-12) {
    cs.H = mean_H(p, s, f);
    const double gp = std::sqrt(gap);
    const double fpp = -cs.K * f;
    const double gpp = -fp * fpp / gp;
    const PrincipalCurvatures pc = principal_curvatures(f, fp, fpp, gp, gpp);
    cs.k1 = pc.k1;
    cs.k2 = pc.k2;
  } else {
    cs.horizontal = true;
  }
  return cs;
}

}  // namespace ricci
