#pragma once

#include "ricci/params.hpp"

namespace ricci {

struct CurvatureSample {
  double s = 0.0;
  double K = 0.0;
  double Kp = 0.0;
  double Kpp = 0.0;
  double H = 0.0;
  double k1 = 0.0;
  double k2 = 0.0;
  double residual = 0.0;  // scale-free Ricci residual
  bool horizontal = false;  // |f'| at the unit bound: H, k2 undefined
};

struct KDerivs {
  double Kp = 0.0;
  double Kpp = 0.0;
};

struct PrincipalCurvatures {
  double k1 = 0.0;
  double k2 = 0.0;
};

// Gaussian curvature of the profile at (s, f):
//   K = ((bs+c)^2 + a f (bs+c) - b f^2) / f^4.
double gauss_K(const RicciParams& p, double s, double f);

// First and second arc-length derivatives of K in closed form.
double gauss_Kp(const RicciParams& p, double s, double f, double K);
KDerivs gauss_K_derivs(const RicciParams& p, double s, double f, double K);

// Mean curvature; throws HorizontalTangent when (af+bs+c)^2 > (1-1e-12) f^2.
double mean_H(const RicciParams& p, double s, double f);

// k1 = -g'/f, k2 = g' f'' - g'' f'. Throws ArcLengthViolation when
// |f'^2 + g'^2 - 1| > 1e-10.
PrincipalCurvatures principal_curvatures(double f, double fp, double fpp, double gp, double gpp);

// Raw residual of K K'' - (K')^2 - 4 K^3 + (f'/f) K K'.
double ricci_residual(double K, double Kp, double Kpp, double f, double fp);

// Residual divided by max(1, K^2 (|K''| + |K'|^2 + |K|^3 + 1)); scale-free
// pass/fail number (K spans many orders of magnitude near domain endpoints).
double ricci_residual_normalized(double K, double Kp, double Kpp, double f, double fp);

// Full curvature record at (s, f) for a profile obeying the reduction ODE.
CurvatureSample curvature_sample(const RicciParams& p, double s, double f);

}  // namespace ricci
