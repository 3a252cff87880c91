#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "ricci/errors.hpp"
#include "ricci/profile.hpp"

using namespace ricci;

TEST_CASE("a = 0 closed form") {
  CHECK(eval_f_case_a0(1.0, 0.0, 1.0, 0.0) == doctest::Approx(1.0));

  // Oracle: integrate x' = (b s + c)/x from (0,1) to s = 1.
  const double oracle = oracles::rk4(
      [](double s, double x) { return s / x; }, 0.0, 1.0, 1.0, 20000);
  const double f1 = eval_f_case_a0(1.0, 0.0, 1.0, 1.0);
  CHECK(f1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(f1 == doctest::Approx(oracle).epsilon(1e-10));

  // Positive radicand outside the maximal interval still evaluates: domain
  // checks live in the classifier.
  const double s2 = std::sqrt(2.0) / 2.0;  // root of the tangent polynomial for (2,0,1)
  CHECK(eval_f_case_a0(2.0, 0.0, 1.0, 0.8) == doctest::Approx(std::sqrt(2.28)).epsilon(1e-15));
  CHECK(0.8 > s2);
  CHECK_THROWS_AS(eval_f_case_a0(-1.0, 0.0, -1.0, 0.0), Error);  // negative radicand
}

TEST_CASE("b = 0 implicit solve") {
  // f + log(f - 1) = s at s = 2 has the exact solution f = 2.
  CHECK(eval_f_case_b0(1.0, -1.0, 0.0, Branch::Plus, 2.0) == doctest::Approx(2.0).epsilon(1e-14));

  // Brute-force bisection oracle on [1 + eps, 10] for s = 1 + e.
  const double target = 1.0 + std::exp(1.0);
  const double oracle = oracles::bisect(
      [&](double f) { return f + std::log(f - 1.0) - target; }, 1.0 + 1e-9, 10.0);
  const double f = eval_f_case_b0(1.0, -1.0, 0.0, Branch::Plus, target);
  CHECK(f == doctest::Approx(oracle).epsilon(1e-13));
  CHECK(f == doctest::Approx(3.0167797648922006).epsilon(1e-13));
  // residual of the implicit equation
  CHECK(std::abs(f + std::log(f - 1.0) - target) < 1e-12);

  // Mirror branch: -f - log(f - 1) = s at s = -2 gives f = 2.
  CHECK(eval_f_case_b0(-1.0, 1.0, 0.0, Branch::Minus, -2.0) ==
        doctest::Approx(2.0).epsilon(1e-14));

  // Monotonicity: strictly increasing in s on Plus, decreasing on Minus.
  double prev_p = 0.0, prev_m = 0.0;
  for (int i = 0; i <= 20; ++i) {
    const double s = -2.0 + 0.3 * i;
    const double fp = eval_f_case_b0(1.0, -1.0, 0.0, Branch::Plus, s);
    const double fm = eval_f_case_b0(-1.0, 1.0, 0.0, Branch::Minus, s);
    if (i > 0) {
      CHECK(fp > prev_p);
      CHECK(fm < prev_m);
    }
    prev_p = fp;
    prev_m = fm;
  }

  // Sign of a f + c stays on the branch along the curve.
  for (int i = 0; i <= 50; ++i) {
    const double s = -5.0 + 0.2 * i;
    const double v = eval_f_case_b0(1.0, -1.0, 0.0, Branch::Plus, s);
    CHECK(v - 1.0 > 0.0);  // a f + c = f - 1
  }

  // No root: K > 0 family below the image of the branch.
  // a = 0.5, c = 1 (plus): G(0+) = -c log c = 0, so y < 0 has no solution.
  CHECK_THROWS_AS(eval_f_case_b0(0.5, 1.0, 0.0, Branch::Plus, -10.0), Error);
}

TEST_CASE("general case closed form against quadrature") {
  RicciParams p{2.0, 8.0, 0.0, -1.0, Branch::Plus};

  // At t = t0 the exponential is 1: s = d - c/b, f = a d t0.
  const GeneralEval at_t0 = eval_general_case(p, -2.0, -2.0);
  CHECK(at_t0.s == doctest::Approx(-1.0));
  CHECK(at_t0.f == doctest::Approx(4.0));

  // Quadrature oracle for the reparametrisation integral.
  auto check_point = [&](const RicciParams& q, double t0, double t) {
    const double B = q.b / (q.a * q.a);
    const double I = oracles::simpson(
        [&](double u) { return u / ((u - 1.0) * u - B); }, t0, t, 1e-13);
    const double e = std::exp(-I);
    const GeneralEval ge = eval_general_case(q, t0, t);
    CHECK(ge.s == doctest::Approx(q.d * e - q.c / q.b).epsilon(1e-10));
    CHECK(ge.f == doctest::Approx(q.a * q.d * t * e).epsilon(1e-10));
    // algebraic identity f = a t (s + c/b)
    CHECK(ge.f == doctest::Approx(q.a * t * (ge.s + q.c / q.b)).epsilon(1e-12));
  };
  check_point(p, -2.0, -1.5);
  CHECK(eval_general_case(p, -2.0, -1.5).s == doctest::Approx(-1.3772241509572743).epsilon(1e-12));
  CHECK(eval_general_case(p, -2.0, -1.5).f == doctest::Approx(4.1316724528718228).epsilon(1e-12));

  // Degenerate discriminant branch: a = 2, b = -1 gives R = (t - 1/2)^2.
  RicciParams pd{2.0, -1.0, 0.0, 1.0, Branch::Plus};
  check_point(pd, 2.0, 3.0);
  CHECK(eval_general_case(pd, 2.0, 3.0).s == doctest::Approx(0.5251039914257685).epsilon(1e-12));

  // Complex-root branch: a = 1.5, b = -1 gives delta < 0.
  RicciParams pc{1.5, -1.0, 0.3, 1.0, Branch::Plus};
  check_point(pc, 2.0, 2.8);

  // Root of R inside [t0, t] is rejected: R = (t-2)(t+1) for (2,8).
  CHECK_THROWS_AS(eval_general_case(p, -2.0, 2.5), Error);
  // Crossing t = 0 flips the sign of f.
  CHECK_THROWS_AS(eval_general_case(pc, 2.0, -1.0), Error);
}

TEST_CASE("general-case chain-rule derivative identity") {
  const RicciParams p{2.0, 8.0, 0.0, -1.0, Branch::Plus};
  const GeneralCurve gc = GeneralCurve::build(p, -2.0);
  for (double frac : {0.1, 0.35, 0.6, 0.9}) {
    const double s = gc.s_min() + frac * (gc.s_max() - gc.s_min());
    const ProfilePoint pt = gc.eval(s);
    const double t = gc.t_of_s(s);
    CHECK(pt.fp == doctest::Approx(p.a + p.b / (p.a * t)).epsilon(1e-10));
    CHECK(pt.fp ==
          doctest::Approx((p.a * pt.f + p.b * s + p.c) / pt.f).epsilon(1e-10));
    CHECK(pt.f == doctest::Approx(p.a * t * (s + p.c / p.b)).epsilon(1e-12));
    CHECK(std::abs(pt.fp) < 1.0);
  }
}

TEST_CASE("IVP recovers closed forms") {
  // (0,1,0): x' = s/x from (0,1) is sqrt(s^2+1).
  {
    const RicciParams p{0.0, 1.0, 0.0, 1.0, Branch::Plus};
    IvpOptions opt;
    opt.span = 5.0;
    const ProfileCurve curve = solve_ivp(p, 0.0, 1.0, opt);
    REQUIRE(curve.samples.size() > 10);
    double dev = 0.0;
    for (const auto& ps : curve.samples)
      dev = std::max(dev, std::abs(ps.f - std::sqrt(ps.s * ps.s + 1.0)));
    CHECK(dev < 1e-8);
    CHECK(curve.stop_left->reason == StopReason::SpanExhausted);
    CHECK(curve.stop_right->reason == StopReason::SpanExhausted);
    // samples strictly ordered in s, g increasing
    for (std::size_t i = 1; i < curve.samples.size(); ++i) {
      CHECK(curve.samples[i].s > curve.samples[i - 1].s);
      CHECK(curve.samples[i].g > curve.samples[i - 1].g);
    }
  }
  // (0,0,0): constant cylinder radius.
  {
    const RicciParams p{0.0, 0.0, 0.0, 4.0, Branch::Plus};
    IvpOptions opt;
    opt.span = 3.0;
    const ProfileCurve curve = solve_ivp(p, 0.0, 2.0, opt);
    for (const auto& ps : curve.samples) CHECK(ps.f == doctest::Approx(2.0).epsilon(1e-12));
  }
  // (1,0,-1) plus branch from (2,2).
  {
    const RicciParams p{1.0, 0.0, -1.0, 0.0, Branch::Plus};
    IvpOptions opt;
    opt.span = 4.0;
    const ProfileCurve curve = solve_ivp(p, 2.0, 2.0, opt);
    double dev = 0.0;
    for (const auto& ps : curve.samples) {
      // d from the seed: a f - c log(a f + c) = a^2 s + d with f(2) = 2
      // 2 + log(1) = 2 => d = 0
      dev = std::max(dev, std::abs(ps.f - eval_f_case_b0(1.0, -1.0, 0.0, Branch::Plus, ps.s)));
    }
    CHECK(dev < 1e-8);
  }
  CHECK_THROWS_AS(solve_ivp({0.0, 1.0, 0.0, 1.0, Branch::Plus}, 0.0, -1.0), Error);
}

TEST_CASE("IVP stops at horizontal tangents and pinch points") {
  // Bounded band: (0,2,0,1) stops at +-sqrt(2)/2.
  {
    const RicciParams p{0.0, 2.0, 0.0, 1.0, Branch::Plus};
    const ProfileCurve curve = solve_ivp(p, 0.0, 1.0);
    CHECK(curve.stop_left->reason == StopReason::BoundaryTangent);
    CHECK(curve.stop_right->reason == StopReason::BoundaryTangent);
    CHECK(std::abs(curve.stop_right->s - std::sqrt(2.0) / 2.0) < 1e-3);
    CHECK(std::abs(curve.stop_left->s + std::sqrt(2.0) / 2.0) < 1e-3);
    for (const auto& ps : curve.samples) CHECK(ps.fp * ps.fp < 1.0);
  }
  // Cone: f = 0.5 s + 1 pinches at s = -2 going left.
  {
    const RicciParams p{0.5, 0.0, 0.0, 1.0, Branch::Plus};
    const ProfileCurve curve = solve_ivp(p, 0.0, 1.0, IvpOptions{.span = 10.0});
    CHECK(curve.stop_left->reason == StopReason::RadiusCollapse);
    CHECK(std::abs(curve.stop_left->s + 2.0) < 1e-3);
    CHECK(curve.stop_right->reason == StopReason::SpanExhausted);
  }
}
