#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "ricci/numerics/ode.hpp"
#include "ricci/numerics/quadrature.hpp"
#include "ricci/numerics/rootfind.hpp"

using namespace ricci;

TEST_CASE("adaptive quadrature hits analytic integrals") {
  CHECK(num::integrate([](double x) { return x * x; }, 0.0, 1.0, 1e-12) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(num::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-12) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // oscillatory + decaying: Int_0^T e^-x cos(10 x) dx in closed form
  const double T = 20.0;
  const double exact =
      (1.0 + std::exp(-T) * (10.0 * std::sin(10.0 * T) - std::cos(10.0 * T))) / 101.0;
  const double v =
      num::integrate([](double x) { return std::exp(-x) * std::cos(10.0 * x); }, 0.0, T, 1e-12);
  CHECK(v == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("endpoint opening integrates sqrt singular derivatives") {
  // Int_0^1 sqrt(1 - x) dx = 2/3, derivative blow-up at x = 1.
  auto f = [](double x) { return std::sqrt(1.0 - x); };
  const double v = num::integrate_endpoint_opened(f, 0.0, 1.0, false, true, 1e-12);
  CHECK(v == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // both ends: Int_0^1 sqrt(x(1-x)) dx = pi/8
  auto g = [](double x) { return std::sqrt(x * (1.0 - x)); };
  const double w = num::integrate_endpoint_opened(g, 0.0, 1.0, true, true, 1e-12);
  CHECK(w == doctest::Approx(std::numbers::pi / 8.0).epsilon(1e-11));
}

TEST_CASE("quadrature self-consistency when halving the tolerance") {
  auto f = [](double x) { return 1.0 / (1.0 + x * x); };
  double prev = num::integrate(f, 0.0, 4.0, 1e-6);
  for (double tol : {5e-7, 2.5e-7, 1.25e-7}) {
    const double cur = num::integrate(f, 0.0, 4.0, tol);
    CHECK(std::abs(cur - prev) < 2.0 * tol);
    prev = cur;
  }
}

TEST_CASE("bracketed root finder") {
  auto f = [](double x) { return x * x - 2.0; };
  const double r = num::solve_bracketed(f, 0.0, 2.0);
  CHECK(r == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(num::solve_bracketed(f, 2.0, 3.0), Error);
}

TEST_CASE("dp5 integrator order and event localization") {
  // y' = y, y(0) = 1: fixed-step error should shrink like h^5.
  num::OdeRhs<1> rhs = [](double, const std::array<double, 1>& y) {
    return std::array<double, 1>{y[0]};
  };
  double err_prev = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double h = k == 0 ? 0.1 : 0.05;
    std::array<double, 1> y{1.0};
    double s = 0.0;
    while (s < 1.0 - 1e-12) {
      y = num::dp5_step<1>(rhs, s, y, h).first;
      s += h;
    }
    const double err = std::abs(y[0] - std::exp(1.0));
    if (k == 1) {
      const double order = std::log2(err_prev / err);
      CHECK(order > 4.5);
      CHECK(order < 5.5);
    }
    err_prev = err;
  }

  // Adaptive run with an event: y' = cos(s), stop at y >= 0.5 (s = pi/6).
  num::OdeRhs<1> rhs2 = [](double s, const std::array<double, 1>&) {
    return std::array<double, 1>{std::cos(s)};
  };
  num::IntegrateOptions<1> opt;
  opt.tol = 1e-11;
  double last_s = 0.0, last_y = 0.0;
  const auto outcome = num::integrate_ode<1>(
      rhs2, 0.0, {0.0}, 3.0, opt,
      [](double, const std::array<double, 1>& y) { return y[0] >= 0.5; },
      [&](double s, const std::array<double, 1>& y) {
        last_s = s;
        last_y = y[0];
      });
  CHECK(outcome == num::OdeOutcome::EventFired);
  CHECK(last_y == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(last_s == doctest::Approx(std::numbers::pi / 6.0).epsilon(1e-8));
}
