#include <doctest.h>

#include <cmath>
#include <random>

#include "core/geometry.hpp"
#include "core/util.hpp"

using namespace wck;

namespace {

// Deterministic sample streams for the property tests.
struct Rng {
  std::mt19937 gen{0x5eed1234};
  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(gen);
  }
  UhpPoint point() {
    return UhpPoint(uniform(-3.0, 3.0), std::exp(uniform(-2.0, 2.0)));
  }
  // Random word in the generators z -> z+1, z -> -1/z.
  MoebiusReal moebius() {
    MoebiusReal m;
    const MoebiusReal t(1.0, 1.0, 0.0, 1.0);
    const MoebiusReal tinv(1.0, -1.0, 0.0, 1.0);
    const MoebiusReal s(0.0, -1.0, 1.0, 0.0);
    int len = int(uniform(1.0, 12.0));
    for (int i = 0; i < len; ++i) {
      switch (int(uniform(0.0, 3.0))) {
        case 0: m = m * t; break;
        case 1: m = m * tinv; break;
        default: m = m * s; break;
      }
    }
    return m;
  }
};

}  // namespace

TEST_CASE("point and map constructors validate") {
  CHECK_THROWS_AS(UhpPoint(0.0, 0.0), const Error&);
  CHECK_THROWS_AS(UhpPoint(1.0, -2.0), const Error&);
  CHECK_THROWS_AS(MoebiusReal(1.0, 0.0, 0.0, -1.0), const Error&);  // det < 0
  CHECK_THROWS_AS(MoebiusReal(1.0, 2.0, 2.0, 4.0), const Error&);   // det = 0

  // entries are rescaled to det 1
  MoebiusReal m(2.0, 0.0, 0.0, 2.0);
  CHECK(m.a * m.d - m.b * m.c == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("distance invariants at exact points") {
  UhpPoint z(0.0, 2.0), w(0.0, 1.0);
  CHECK(u_invariant(z, w) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(cosh_dist(z, w) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(sinh_dist(z, w) == doctest::Approx(0.75).epsilon(1e-15));
  // acosh(5/4) = log 2
  CHECK(dist(z, w) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(exp_minus_dist(z, w) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(dist(z, z) == 0.0);

  // coincident-point stability: no acosh roundoff floor
  UhpPoint z2(1e-9, 2.0);
  CHECK(dist(z, z2) == doctest::Approx(0.5e-9).epsilon(1e-6));
}

TEST_CASE("moebius maps are isometries") {
  Rng rng;
  for (int i = 0; i < 200; ++i) {
    MoebiusReal m = rng.moebius();
    UhpPoint z = rng.point(), w = rng.point();
    double before = u_invariant(z, w);
    double after = u_invariant(apply(m, z), apply(m, w));
    CHECK(std::abs(after - before) <= 1e-10 * (1.0 + before));
  }
}

TEST_CASE("triangle inequality and symmetry") {
  Rng rng;
  for (int i = 0; i < 200; ++i) {
    UhpPoint z = rng.point(), v = rng.point(), w = rng.point();
    CHECK(dist(z, w) == doctest::Approx(dist(w, z)).epsilon(1e-13));
    CHECK(dist(z, w) <= dist(z, v) + dist(v, w) + 1e-12);
  }
}

TEST_CASE("distance to a geodesic line") {
  GeodesicLine axis{};  // vertical axis
  UhpPoint z(1.0, 2.0);
  CHECK(dist_to_line(z, axis) ==
        doctest::Approx(std::asinh(0.5)).epsilon(1e-15));
  CHECK(cosh_dist_to_line(z, axis) ==
        doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-15));
  CHECK(dist_to_line(UhpPoint(0.0, 7.3), axis) == 0.0);

  // pullback through the conjugator is exact
  Rng rng;
  for (int i = 0; i < 100; ++i) {
    MoebiusReal m = rng.moebius();
    UhpPoint p = rng.point();
    CHECK(dist_to_line(apply(m, p), GeodesicLine{m}) ==
          doctest::Approx(dist_to_line(p, axis)).epsilon(1e-11));
  }
}

TEST_CASE("distance splits over the axis foot point") {
  // cosh d(z, e^rho i) = cosh(rho - log|z|) cosh d(z, axis)
  Rng rng;
  GeodesicLine axis{};
  for (int i = 0; i < 100; ++i) {
    UhpPoint z = rng.point();
    double rho = rng.uniform(-2.0, 2.0);
    double lhs = cosh_dist(z, UhpPoint(0.0, std::exp(rho)));
    double rhs = std::cosh(rho - std::log(std::abs(z.as_complex()))) *
                 cosh_dist_to_line(z, axis);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
  }
}

TEST_CASE("polar and cylindrical coordinates") {
  CHECK(polar(UhpPoint(0.0, 1.0)).rho == 0.0);
  CHECK_FALSE(polar(UhpPoint(0.0, 1.0)).theta.has_value());
  CHECK(polar(UhpPoint(0.0, 3.0)).theta.value() ==
        doctest::Approx(M_PI / 2).epsilon(1e-14));

  Rng rng;
  GeodesicLine axis{};
  for (int i = 0; i < 50; ++i) {
    UhpPoint z = rng.point();
    CHECK(polar(z).rho == doctest::Approx(dist(z, UhpPoint(0.0, 1.0)))
                              .epsilon(1e-12));
    PolarCoords cyl = cylindrical(z);
    CHECK(cyl.rho ==
          doctest::Approx(std::log(std::abs(z.as_complex()))).epsilon(1e-12));
    // sin(theta) cosh d(z, axis) = 1
    CHECK(std::sin(cyl.theta.value()) * cosh_dist_to_line(z, axis) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("geodesic arclength nodes") {
  const double len = 1.9248473002384139;
  LineNodes nodes = geodesic_nodes(GeodesicLine{}, len, 24);
  REQUIRE(nodes.points.size() == nodes.weights.size());

  double wsum = 0.0, first_moment = 0.0;
  for (size_t i = 0; i < nodes.points.size(); ++i) {
    CHECK(std::abs(nodes.points[i].x) < 1e-15);  // vertical axis
    double rho = std::log(nodes.points[i].y);
    CHECK(rho >= 0.0);
    CHECK(rho <= len);
    wsum += nodes.weights[i];
    first_moment += nodes.weights[i] * rho;
  }
  CHECK(wsum == doctest::Approx(len).epsilon(1e-13));
  CHECK(first_moment == doctest::Approx(len * len / 2).epsilon(1e-13));
}

TEST_CASE("horocycle nodes") {
  LineNodes nodes = horocycle_nodes(2.5, 20);
  double wsum = 0.0, xsum = 0.0;
  for (size_t i = 0; i < nodes.points.size(); ++i) {
    CHECK(nodes.points[i].y == 2.5);
    CHECK(nodes.points[i].x > 0.0);
    CHECK(nodes.points[i].x < 1.0);
    wsum += nodes.weights[i];
    xsum += nodes.weights[i] * nodes.points[i].x;
  }
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(xsum == doctest::Approx(0.5).epsilon(1e-14));
}
