#include <doctest.h>

#include <cmath>

#include "ftqkd/quadrature.hpp"

using namespace ftqkd;

TEST_SUITE("quadrature") {

TEST_CASE("polynomials up to cubic are exact") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return x * x * x - 2.0 * x; }, -1.0, 2.0) ==
        doctest::Approx(15.0 / 4.0 - 3.0).epsilon(1e-13));
}

TEST_CASE("smooth transcendental integrands hit the requested tolerance") {
  const double pi = 3.14159265358979323846;
  CHECK(std::abs(integrate([](double x) { return std::sin(x); }, 0.0, pi) - 2.0) < 1e-9);
  const double want = std::exp(1.0) - std::exp(-1.0);
  CHECK(std::abs(integrate([](double x) { return std::exp(x); }, -1.0, 1.0) - want) < 1e-9);
}

TEST_CASE("gaussian mass over a wide window") {
  const double sqrt_pi = 1.7724538509055160273;
  double got = integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0);
  CHECK(std::abs(got - sqrt_pi) < 1e-9);
}

TEST_CASE("narrow off-center peak is resolved") {
  // 1/e half-width 0.05 centered at 0.3; the full mass is w*sqrt(pi) up to
  // tail corrections below 1e-16.
  const double w = 0.05, c = 0.3;
  double got = integrate([&](double x) {
    double u = (x - c) / w;
    return std::exp(-u * u);
  }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(got - w * 1.7724538509055160273) < 1e-9);
}

TEST_CASE("tighter tolerances give closer results") {
  auto f = [](double x) { return std::cos(3.0 * x) * std::exp(-0.5 * x); };
  // Antiderivative of exp(a x) cos(b x): exp(ax) (a cos bx + b sin bx)/(a^2+b^2).
  const double a = -0.5, b = 3.0;
  auto F = [&](double x) {
    return std::exp(a * x) * (a * std::cos(b * x) + b * std::sin(b * x)) / (a * a + b * b);
  };
  const double want = F(2.0) - F(0.0);
  double loose = integrate(f, 0.0, 2.0, 1e-4);
  double tight = integrate(f, 0.0, 2.0, 1e-12);
  CHECK(std::abs(loose - want) < 1e-4);
  CHECK(std::abs(tight - want) < 1e-11);
  CHECK(std::abs(tight - want) <= std::abs(loose - want) + 1e-12);
}

TEST_CASE("depth cap terminates on a jump and stays accurate") {
  auto step = [](double x) { return x > 1.0 / 3.0 ? 1.0 : 0.0; };
  double got = integrate(step, 0.0, 1.0, 1e-9);
  CHECK(std::abs(got - 2.0 / 3.0) < 1e-6);
}

TEST_CASE("zero-length interval integrates to zero") {
  CHECK(integrate([](double x) { return std::exp(x); }, 1.5, 1.5) == 0.0);
}

}  // TEST_SUITE
