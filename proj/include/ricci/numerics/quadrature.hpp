#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

#include "ricci/errors.hpp"

namespace ricci::num {

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1,1] (QUADPACK values).
inline constexpr double kk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kk_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
// Gauss-7 weights, matching kk_nodes[1], [3], [5], [7].
inline constexpr double kg_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class F>
std::pair<double, double> gk15(const F& f, double lo, double hi) {
  const double h = 0.5 * (hi - lo);
  const double mid = 0.5 * (lo + hi);
  double v[8];  // summed node pairs; v[7] is the center
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kk_nodes[i];
    v[i] = f(mid - dx) + f(mid + dx);
  }
  v[7] = f(mid);
  double resk = 0.0;
  for (int i = 0; i < 8; ++i) resk += kk_weights[i] * v[i];
  const double resg =
      kg_weights[0] * v[1] + kg_weights[1] * v[3] + kg_weights[2] * v[5] + kg_weights[3] * v[7];
  return {resk * h, std::abs((resk - resg) * h)};
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration to an absolute error target.
// Bisects until the local GK15 error estimate fits the locally allotted
// tolerance. Throws NumericalFailure if the recursion cannot resolve the
// integrand (depth cap 60).
template <class F>
double integrate(const F& f, double lo, double hi, double abs_tol = 1e-10) {
  if (lo == hi) return 0.0;
  struct Seg {
    double lo, hi, tol;
    int depth;
  };
  double total = 0.0;
  Seg stack[64];
  int top = 0;
  stack[top++] = {lo, hi, abs_tol, 0};
  while (top > 0) {
    Seg s = stack[--top];
    auto [val, err] = detail::gk15(f, s.lo, s.hi);
    if (err <= s.tol || s.depth >= 60) {
      if (err > 100.0 * s.tol && s.depth >= 60)
        fail(Errc::NumericalFailure, "quadrature failed to converge");
      total += val;
      continue;
    }
    const double mid = 0.5 * (s.lo + s.hi);
    stack[top++] = {s.lo, mid, 0.5 * s.tol, s.depth + 1};
    stack[top++] = {mid, s.hi, 0.5 * s.tol, s.depth + 1};
  }
  return total;
}

// Integral with a square-root-type derivative blow-up at one or both ends
// (integrand bounded, d/ds unbounded). Opens the endpoint with the
// substitution s = end -+ u^2, which makes sqrt(linear) integrands smooth.
template <class F>
double integrate_endpoint_opened(const F& f, double lo, double hi, bool open_lo, bool open_hi,
                                 double abs_tol = 1e-10) {
  if (lo == hi) return 0.0;
  if (!open_lo && !open_hi) return integrate(f, lo, hi, abs_tol);
  const double span = hi - lo;
  const double cut = 0.25 * span;  // open only the outer quarter on each side
  double total = 0.0;
  double core_lo = lo, core_hi = hi;
  int parts = 1 + (open_lo ? 1 : 0) + (open_hi ? 1 : 0);
  const double tol = abs_tol / parts;
  if (open_lo) {
    core_lo = lo + cut;
    const double w = std::sqrt(cut);
    total += integrate([&](double u) { return 2.0 * u * f(lo + u * u); }, 0.0, w, tol);
  }
  if (open_hi) {
    core_hi = hi - cut;
    const double w = std::sqrt(cut);
    total += integrate([&](double u) { return 2.0 * u * f(hi - u * u); }, 0.0, w, tol);
  }
  total += integrate(f, core_lo, core_hi, tol);
  return total;
}

}  // namespace ricci::num
