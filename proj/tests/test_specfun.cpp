#include <doctest.h>

#include <cmath>

#include "core/specfun.hpp"
#include "core/util.hpp"

using namespace wck;

namespace {
double rel(const Complex& got, const Complex& want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}
}  // namespace

TEST_CASE("gamma function") {
  CHECK(rel(gamma_fn(Complex(0.5, 0.0)), std::sqrt(M_PI)) < 1e-14);
  CHECK(rel(gamma_fn(Complex(5.0, 0.0)), 24.0) < 1e-14);
  // Gamma(1+i), reference value to 18 digits
  CHECK(rel(gamma_fn(Complex(1.0, 1.0)),
            Complex(0.498015668118356043, -0.154949828301810685)) < 1e-14);

  // recurrence Gamma(z+1) = z Gamma(z)
  for (Complex z : {Complex(0.3, 2.1), Complex(-1.7, 0.4), Complex(6.0, -3.0)})
    CHECK(rel(gamma_fn(z + 1.0), z * gamma_fn(z)) < 1e-13);

  CHECK(rel(std::exp(log_gamma(Complex(3.7, 1.2))),
            gamma_fn(Complex(3.7, 1.2))) < 1e-13);

  CHECK_THROWS_AS(gamma_fn(Complex(0.0, 0.0)), const Error&);
  CHECK_THROWS_AS(gamma_fn(Complex(-3.0, 0.0)), const Error&);
}

TEST_CASE("pochhammer symbols") {
  CHECK(rel(pochhammer(Complex(2.5, 0.0), 3), 2.5 * 3.5 * 4.5) < 1e-15);
  CHECK(pochhammer(Complex(1.3, -0.7), 0) == Complex(1.0, 0.0));
  Complex a(0.8, 1.1);
  CHECK(rel(pochhammer(a, 4), a * (a + 1.0) * (a + 2.0) * (a + 3.0)) < 1e-14);

  // duplication: 2^{-2k} (2a)_{2k} / (a+1/2)_k = (a)_k
  Complex ad(1.3, 0.0);
  Complex lhs = std::pow(2.0, -8.0) * pochhammer(2.0 * ad, 8) /
                pochhammer(ad + 0.5, 4);
  CHECK(rel(lhs, pochhammer(ad, 4)) < 1e-14);
}

TEST_CASE("gauss hypergeometric series") {
  // F(a,b;b;x) = (1-x)^{-a}
  Complex a(0.7, 0.4), b(1.9, 0.0);
  CHECK(rel(gauss_2f1(a, b, b, 0.35), std::pow(Complex(0.65), -a)) < 1e-13);

  // F(1,1;2;x) = -log(1-x)/x
  CHECK(rel(gauss_2f1(Complex(1.0, 0.0), 1.0, 2.0, 0.3),
            -std::log(0.7) / 0.3) < 1e-13);

  // reference value to 18 digits
  CHECK(rel(gauss_2f1(Complex(0.5, 0.2), 1.1, Complex(2.3, 1.0), 0.35),
            Complex(1.09905208693624506, -0.00631324913518979940)) < 1e-13);

  // Euler transform route agrees away from the series' comfort zone
  Complex c(2.6, 0.3);
  CHECK(rel(gauss_2f1_euler(a, b, c, 0.55), gauss_2f1(a, b, c, 0.55)) < 1e-12);

  // connection-formula route near x = 1
  Complex v1 = gauss_2f1_near_one(Complex(0.25, 0.0), 0.75, 1.6, 0.8);
  Complex v2 = gauss_2f1(Complex(0.25, 0.0), 0.75, 1.6, 0.8);
  CHECK(rel(v1, v2) < 1e-11);
}

TEST_CASE("exponential-argument hypergeometric term") {
  // reference value at nu = 2.2, xi = 1.2
  CHECK(rel(hypergeom_point_term(Complex(2.2, 0.0), std::exp(-1.2)),
            0.340773897446110912) < 1e-13);

  // quadratic transform: cosh^{-nu}(xi) F(nu/2, nu/2+1/2; nu+1/2; sech^2 xi)
  // equals (2 e^{-xi})^nu F(nu, 1/2; nu+1/2; e^{-2 xi})
  for (Complex nu : {Complex(1.8, 0.0), Complex(2.2, 0.4)}) {
    double xi = 1.5, ch = std::cosh(xi);
    Complex direct = std::pow(Complex(ch), -nu) *
                     gauss_2f1(0.5 * nu, 0.5 * nu + 0.5, nu + 0.5,
                               1.0 / (ch * ch));
    CHECK(rel(hypergeom_point_term(nu, std::exp(-xi)), direct) < 1e-12);
  }
}

TEST_CASE("conical legendre function") {
  // reference values: P_{-1/2+ir}(x)
  CHECK(rel(legendre_p_conical(Complex(0.0, 0.0), 1.5),
            0.945006330929758054) < 1e-11);
  CHECK(rel(legendre_p_conical(Complex(1.3, 0.0), 2.6),
            0.161931315765886023) < 1e-11);
  CHECK(rel(legendre_p_conical(Complex(1.3, 0.0), 1.02),
            0.980789418721655733) < 1e-11);
  // large order, large argument: integral route
  CHECK(rel(legendre_p_conical(Complex(20.0, 0.0), std::cosh(8.0)),
            -0.00244661864436572313) < 1e-9);
  CHECK(legendre_p_conical(Complex(0.7, 0.0), 1.0) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("legendre q") {
  // Q_1(x) = x/2 log((x+1)/(x-1)) - 1
  CHECK(rel(legendre_q(Complex(1.0, 0.0), 2.0), std::log(3.0) - 1.0) < 1e-13);
  CHECK(rel(legendre_q(Complex(1.5, 0.0), 1.8), 0.062140265685085591) <
        1e-12);
  // reference value, complex degree
  CHECK(rel(legendre_q(Complex(1.5, 0.7), 2.3),
            Complex(0.011213163660146688, -0.027280488303751898)) < 1e-11);

  // exponential-argument form agrees with the direct form
  for (double xi : {0.4, 1.7, 6.0}) {
    Complex nu(2.3, 1.1);
    CHECK(rel(legendre_q_exp_arg(nu, std::exp(-xi)),
              legendre_q(nu, std::cosh(xi))) < 1e-11);
  }
}

TEST_CASE("conical splitting coefficients") {
  // P_{-1/2+ir}(1+2u) = h(1/2+ir) + h(1/2-ir)
  for (double r : {0.4, 1.3, 3.0}) {
    for (double u : {0.2, 0.8, 2.5}) {
      Complex lhs = legendre_p_conical(Complex(r, 0.0), 1.0 + 2.0 * u);
      Complex rhs = conical_split_h(Complex(0.5, r), u) +
                    conical_split_h(Complex(0.5, -r), u);
      CHECK(std::abs(lhs - rhs) < 1e-11 * std::max(1.0, std::abs(lhs)));
    }
  }
  // r = 0 makes the two halves collide on a pole of the coefficient
  CHECK_THROWS_AS(conical_split_h(Complex(0.5, 0.0), 0.8), const Error&);
}

TEST_CASE("spectral coefficient families") {
  Complex nu(2.2, 0.0);
  // b_k(nu) = (nu/2)_k ((nu+1)/2)_k / (nu+1/2)_k
  for (int k : {0, 1, 5}) {
    Complex want = pochhammer(0.5 * nu, k) * pochhammer(0.5 * (nu + 1.0), k) /
                   pochhammer(nu + 0.5, k);
    CHECK(rel(b_coeff(nu, k), want) < 1e-13);
  }

  // c(nu) = 2^{-nu-1} Gamma(nu) / (Gamma(nu-1/2) pi^{3/2} i)
  Complex want_c = std::pow(2.0, -nu - 1.0) * gamma_fn(nu) /
                   (gamma_fn(nu - 0.5) * std::pow(M_PI, 1.5) *
                    Complex(0.0, 1.0));
  CHECK(rel(c_coeff(nu), want_c) < 1e-13);

  // a_nu(s) has gamma poles in the right half-plane edge cases
  CHECK(std::isfinite(std::abs(a_coeff(Complex(0.5, 1.3), 2.0))));
}
