#include "ricci/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ricci/classify.hpp"
#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/geometry.hpp"

namespace ricci {

namespace {

void require_uniform(std::span<const double> s) {
  const double h = s[1] - s[0];
  for (std::size_t i = 1; i + 1 < s.size(); ++i)
    if (std::abs((s[i + 1] - s[i]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
      fail(Errc::BadParameters, "samples are not uniformly spaced");
}

// Derivative at the middle of three (not necessarily equispaced) points.
double lagrange_dy(double s0, double y0, double s1, double y1, double s2, double y2) {
  return y0 * (s1 - s2) / ((s0 - s1) * (s0 - s2)) +
         y1 * (2.0 * s1 - s0 - s2) / ((s1 - s0) * (s1 - s2)) +
         y2 * (s1 - s0) / ((s2 - s0) * (s2 - s1));
}

}  // namespace

std::vector<double> fd_gauss_K(std::span<const double> s, std::span<const double> f) {
  if (s.size() < 5 || f.size() != s.size())
    fail(Errc::TooFewSamples, "need at least 5 matched uniform samples");
  require_uniform(s);
  const double h = s[1] - s[0];
  std::vector<double> K;
  K.reserve(s.size() - 2);
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double fpp = (f[i - 1] - 2.0 * f[i] + f[i + 1]) / (h * h);
    K.push_back(-fpp / f[i]);
  }
  return K;
}

std::vector<double> fd_log_condition(std::span<const double> K, std::span<const double> f,
                                     double h) {
  if (K.size() < 3 || f.size() != K.size())
    fail(Errc::TooFewSamples, "need at least 3 matched samples");
  for (double k : K)
    if (!(k < 0.0)) fail(Errc::NonNegativeK, "the logarithmic form needs K < 0 throughout");
  std::vector<double> out;
  out.reserve(K.size() - 2);
  for (std::size_t i = 1; i + 1 < K.size(); ++i) {
    const double L0 = std::log(-K[i - 1]), L1 = std::log(-K[i]), L2 = std::log(-K[i + 1]);
    const double Lp = (L2 - L0) / (2.0 * h);
    const double Lpp = (L0 - 2.0 * L1 + L2) / (h * h);
    const double fp = (f[i + 1] - f[i - 1]) / (2.0 * h);
    out.push_back(4.0 * K[i] - (Lpp + (fp / f[i]) * Lp));
  }
  return out;
}

ValidationReport validate_curve(const ProfileCurve& curve) {
  const auto& ss = curve.samples;
  if (ss.size() < 3) fail(Errc::TooFewSamples, "need at least 3 samples");
  const RicciParams& p = curve.params;
  ValidationReport rep;

  // --- checks on the curve's own grid -------------------------------------
  double max_seg2 = 0.0;
  double f_scale = 0.0;
  for (const auto& psa : ss) f_scale = std::max(f_scale, std::abs(psa.f));
  for (std::size_t i = 1; i + 1 < ss.size(); ++i) {
    const auto &l = ss[i - 1], &m = ss[i], &r = ss[i + 1];
    max_seg2 = std::max(max_seg2, (m.s - l.s) * (r.s - m.s));
    const double fp_fd = lagrange_dy(l.s, l.f, m.s, m.f, r.s, r.f);
    const double gp_fd = lagrange_dy(l.s, l.g, m.s, m.g, r.s, r.g);
    rep.max_ode_residual = std::max(
        rep.max_ode_residual, std::abs(m.f * fp_fd - (p.a * m.f + p.b * m.s + p.c)));
    rep.max_arclength_violation =
        std::max(rep.max_arclength_violation, std::abs(m.fp * m.fp + gp_fd * gp_fd - 1.0));
  }
  // Sign constancy of K (identically-zero curves count as constant).
  double k_lo = 0.0, k_hi = 0.0, k_abs = 0.0;
  for (const auto& psa : ss) {
    k_lo = std::min(k_lo, psa.K);
    k_hi = std::max(k_hi, psa.K);
    k_abs = std::max(k_abs, std::abs(psa.K));
  }
  rep.sign_constant = !(k_lo < -1e-14 * k_abs && k_hi > 1e-14 * k_abs);

  // --- uniform resample through the closed-form evaluators ----------------
  // For the general case the curve fixes its own chart component; recover the
  // gauge point t = f / (a (s + c/b)) from an interior sample.
  std::optional<double> t0_hint;
  if (p.a != 0.0 && p.b != 0.0) {
    const double cb = p.c / p.b;
    for (std::size_t off = 0; off < ss.size(); ++off) {
      const auto& m = ss[(ss.size() / 2 + off) % ss.size()];
      const double w = m.s + cb;
      if (std::abs(w) > 1e-6 * (1.0 + std::abs(m.s))) {
        t0_hint = m.f / (p.a * w);
        break;
      }
    }
  }
  const ResolvedProfile rp = resolve_profile(p, t0_hint);
  double lo = ss.front().s, hi = ss.back().s;
  const double span = hi - lo;
  const double fd_h = 1e-4;
  const double inset = std::max(1e-3 * span, 3.0 * fd_h);
  lo += inset;
  hi -= inset;
  if (lo < hi && span > 10.0 * inset) {
    const std::size_t n_uni = 513;
    const double h_uni = (hi - lo) / double(n_uni - 1);
    std::vector<double> us(n_uni), uf(n_uni);
    for (std::size_t i = 0; i < n_uni; ++i) {
      us[i] = lo + h_uni * double(i);
      uf[i] = rp.eval(us[i]).f;
    }
    const std::vector<double> K_fd = fd_gauss_K(us, uf);
    double k_scale = 1.0;
    for (std::size_t i = 1; i + 1 < n_uni; ++i) {
      const double K = gauss_K(p, us[i], uf[i]);
      k_scale = std::max(k_scale, std::abs(K));
      rep.max_K_fd_error = std::max(rep.max_K_fd_error, std::abs(K_fd[i - 1] - K));

      // Closed-form residual and the local-stencil FD residual at h = 1e-4.
      const CurvatureSample cs = curvature_sample(p, us[i], uf[i]);
      rep.max_ricci_residual_closed = std::max(rep.max_ricci_residual_closed, cs.residual);
      double Ks[5];
      for (int k = -2; k <= 2; ++k) {
        const double sk = us[i] + fd_h * double(k);
        Ks[k + 2] = gauss_K(p, sk, rp.eval(sk).f);
      }
      const double Kp = (Ks[3] - Ks[1]) / (2.0 * fd_h);
      const double Kpp = (Ks[1] - 2.0 * Ks[2] + Ks[3]) / (fd_h * fd_h);
      const double fp = rp.eval(us[i]).fp;
      rep.max_ricci_residual_fd = std::max(
          rep.max_ricci_residual_fd, ricci_residual_normalized(K, Kp, Kpp, uf[i], fp));
    }
    if (rep.max_K_fd_error > std::max(1e-3, 20.0 * h_uni * h_uni * k_scale)) {
      rep.pass = false;
      rep.notes.push_back("max_K_fd_error");
    }
  } else {
    rep.notes.push_back("interval too short for the uniform resample battery");
  }

  // --- thresholds ----------------------------------------------------------
  // FD on the curve's own (possibly coarse) grid carries O(h^2) truncation;
  // scale the acceptance accordingly.
  const double ode_tol = std::max(1e-4, 2.0 * max_seg2 * std::max(1.0, f_scale));
  const double arc_tol = std::max(1e-4, 2.0 * max_seg2);
  if (rep.max_ode_residual > ode_tol) {
    rep.pass = false;
    rep.notes.push_back("max_ode_residual");
  }
  if (rep.max_arclength_violation > arc_tol) {
    rep.pass = false;
    rep.notes.push_back("max_arclength_violation");
  }
  if (rep.max_ricci_residual_closed > 1e-9) {
    rep.pass = false;
    rep.notes.push_back("max_ricci_residual_closed");
  }
  if (rep.max_ricci_residual_fd > 1e-4) {
    rep.pass = false;
    rep.notes.push_back("max_ricci_residual_fd");
  }
  if (!rep.sign_constant) {
    rep.pass = false;
    rep.notes.push_back("sign_constant");
  }
  return rep;
}

}  // namespace ricci
