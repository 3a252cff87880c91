#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "ricci/errors.hpp"

namespace ricci::num {

struct RootOptions {
  double x_rel_tol = 1e-15;   // stop when bracket width <= rel*|x| + abs
  double x_abs_tol = 0.0;
  double f_tol = 0.0;         // optional early-out on |f|
  std::size_t max_iter = 200;
};

// Bracketed scalar root finding: secant step when it lands comfortably inside
// the bracket, bisection otherwise. Requires f(lo) and f(hi) of opposite sign.
template <class F>
double solve_bracketed(const F& f, double lo, double hi, RootOptions opt = {}) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    fail(Errc::NoBracket, "no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  double x = lo, fx = flo;
  for (std::size_t it = 0; it < opt.max_iter; ++it) {
    const double width = hi - lo;
    double cand = lo - flo * width / (fhi - flo);  // secant through bracket ends
    const double margin = 0.01 * width;
    if (!(cand > lo + margin) || !(cand < hi - margin)) cand = lo + 0.5 * width;
    x = cand;
    fx = f(x);
    if (fx == 0.0 || (opt.f_tol > 0.0 && std::abs(fx) <= opt.f_tol)) return x;
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    if (hi - lo <= opt.x_abs_tol + opt.x_rel_tol * std::abs(x)) break;
  }
  return 0.5 * (lo + hi);
}

// Expands a bracket geometrically from x0 in direction dir (+1/-1) until the
// sign of f changes or the limit is reached. Returns {near, far} with a sign
// change between them. step0 is the initial offset.
template <class F>
std::pair<double, double> expand_bracket(const F& f, double x0, int dir, double step0,
                                         double limit, std::size_t max_doublings = 200) {
  double step = step0;
  double prev = x0;
  double fprev = f(prev);
  if (fprev == 0.0) return {prev, prev};
  for (std::size_t i = 0; i < max_doublings; ++i) {
    double next = x0 + dir * step;
    if ((dir > 0 && next > limit) || (dir < 0 && next < limit)) next = limit;
    const double fnext = f(next);
    if (fnext == 0.0) return {next, next};
    if ((fnext > 0.0) != (fprev > 0.0)) return dir > 0 ? std::pair{prev, next} : std::pair{next, prev};
    if (next == limit) break;
    prev = next;
    fprev = fnext;
    step *= 2.0;
  }
  fail(Errc::NoBracket, "bracket expansion exhausted");
}

}  // namespace ricci::num
