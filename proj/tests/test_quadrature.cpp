#include <doctest.h>

#include <cmath>

#include "core/quadrature.hpp"
#include "core/util.hpp"

using namespace wck;

namespace {
const QuadratureConfig kTight{1e-14, 1e-12, 20000, 16};
}

TEST_CASE("gauss-legendre nodes and weights") {
  const auto& gl = gauss_legendre(16);
  REQUIRE(gl.nodes.size() == 16);
  double wsum = 0.0;
  for (size_t i = 0; i < 16; ++i) {
    wsum += gl.weights[i];
    // symmetric rule
    CHECK(gl.nodes[i] == doctest::Approx(-gl.nodes[15 - i]).epsilon(1e-14));
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));

  // order-16 rule is exact for degree <= 31
  double m30 = panel_integral(RealFn([](double x) { return std::pow(x, 30.0); }),
                              -1.0, 1.0, 16);
  CHECK(m30 == doctest::Approx(2.0 / 31.0).epsilon(1e-13));
}

TEST_CASE("finite-interval integration") {
  double cubic = integrate(RealFn([](double x) { return x * x * x; }), 0.0,
                           1.0, kTight);
  CHECK(cubic == doctest::Approx(0.25).epsilon(1e-14));

  double sine = integrate(RealFn([](double x) { return std::sin(x); }), 0.0,
                          M_PI, kTight);
  CHECK(sine == doctest::Approx(2.0).epsilon(1e-14));

  Complex osc = integrate(
      [](double x) { return std::exp(Complex(0.0, 5.0) * x); }, 0.0, 2.0,
      kTight);
  Complex want = (std::exp(Complex(0.0, 10.0)) - 1.0) / Complex(0.0, 5.0);
  CHECK(std::abs(osc - want) < 1e-13);
}

TEST_CASE("panel cap reached on endpoint singularity") {
  QuadratureConfig cfg{1e-14, 1e-14, 8, 16};
  CHECK_THROWS_AS(
      integrate(RealFn([](double x) { return 1.0 / std::sqrt(x + 1e-300); }),
                0.0, 1.0, cfg),
      const Error&);
}

TEST_CASE("semi-infinite integration with exponential decay") {
  Complex a = integrate_to_infinity(
      [](double x) { return Complex(std::exp(-2.0 * x)); }, 1.0, 2.0, kTight);
  CHECK(std::abs(a - std::exp(-2.0) / 2.0) < 1e-13);

  // Gamma(3) = 2 with slack in the stated decay rate
  Complex b = integrate_to_infinity(
      [](double x) { return Complex(x * x * std::exp(-x)); }, 0.0, 0.8,
      kTight);
  CHECK(std::abs(b - 2.0) < 1e-12);
}

TEST_CASE("cosine and sine transforms of an exponential") {
  // int_0^inf e^{-l u} cos(ru) du = l/(l^2+r^2), sin: r/(l^2+r^2)
  const double l = 1.3;
  auto f = [l](double u) { return Complex(std::exp(-l * u)); };

  Complex c = cosine_integral(f, Complex(2.7, 0.0), l, kTight);
  CHECK(std::abs(c - l / (l * l + 2.7 * 2.7)) < 5e-13);

  Complex s = sine_integral(f, Complex(2.7, 0.0), l, kTight);
  CHECK(std::abs(s - 2.7 / (l * l + 2.7 * 2.7)) < 5e-13);

  // complex frequency inside the envelope strip
  Complex r(0.4, 0.3);
  Complex cc = cosine_integral(f, r, l, kTight);
  CHECK(std::abs(cc - l / (l * l + r * r)) < 1e-12);

  // offset lower limit
  Complex ct = cosine_integral(f, Complex(2.7, 0.0), l, kTight, 1.5);
  Complex head = integrate([&](double u) { return f(u) * std::cos(2.7 * u); },
                           0.0, 1.5, kTight);
  CHECK(std::abs(ct + head - l / (l * l + 2.7 * 2.7)) < 1e-12);
}

TEST_CASE("algebraically decaying oscillatory tail") {
  // int_pi^inf sin(x)/x dx = pi/2 - Si(pi)
  const double want = -0.28114072518756955;
  double tail = -1.0;
  Complex v = oscillatory_tail_integral(
      [](double x) { return Complex(std::sin(x) / x); }, M_PI, M_PI, 80,
      kTight, &tail);
  CHECK(std::abs(v - want) < 1e-10);
  CHECK(tail >= 0.0);
  CHECK(tail < 1e-8);
}

TEST_CASE("chebyshev interpolant") {
  ChebyshevSeries ch([](double x) { return Complex(std::exp(x)); }, 0.0, 2.0,
                     24);
  CHECK(ch.trailing_error() < 1e-13);
  for (double x : {0.0, 0.31, 1.0, 1.77, 2.0})
    CHECK(std::abs(ch(x) - std::exp(x)) < 1e-12);

  PiecewiseChebyshev pw([](double x) { return Complex(std::log1p(x)); },
                        {0.5, 2.0, 4.0, 8.0}, 20);
  CHECK(pw.trailing_error() < 1e-12);
  for (double x : {0.5, 1.3, 3.99, 6.2, 8.0})
    CHECK(std::abs(pw(x) - std::log1p(x)) < 1e-11);
}
