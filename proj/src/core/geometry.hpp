#pragma once

#include <optional>

#include "core/quadrature.hpp"
#include "core/util.hpp"

namespace wck {

// Point x + iy in the upper half-plane; y > 0 enforced at construction.
struct UhpPoint {
  double x = 0.0;
  double y = 1.0;

  UhpPoint() = default;
  UhpPoint(double x_, double y_);
  explicit UhpPoint(const Complex& z) : UhpPoint(z.real(), z.imag()) {}
  Complex as_complex() const { return {x, y}; }
};

// Real Moebius transformation z -> (az + b)/(cz + d). Stored with ad - bc
// normalised to 1; construction rejects |det| below 1e-12 of the entry scale
// and negative determinants (those swap half-planes).
struct MoebiusReal {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  MoebiusReal() = default;
  MoebiusReal(double a_, double b_, double c_, double d_);
  MoebiusReal inverse() const { return {d, -b, -c, a}; }
  MoebiusReal operator*(const MoebiusReal& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
};

// Geodesic as the image of the vertical axis {iy : y > 0} under `conjugator`.
struct GeodesicLine {
  MoebiusReal conjugator;
};

// rho = hyperbolic radius; theta absent when the point coincides with the
// centre (direction undefined there).
struct PolarCoords {
  double rho = 0.0;
  std::optional<double> theta;
};

UhpPoint apply(const MoebiusReal& m, const UhpPoint& z);

// Point-pair invariant u(z, w) = |z - w|^2 / (4 Im z Im w).
double u_invariant(const UhpPoint& z, const UhpPoint& w);

// cosh dist = 1 + 2u and sinh dist = 2 sqrt(u(u+1)) evaluated without the
// acosh/cosh round trip, exact down to coincident points.
double cosh_dist(const UhpPoint& z, const UhpPoint& w);
double sinh_dist(const UhpPoint& z, const UhpPoint& w);
double dist(const UhpPoint& z, const UhpPoint& w);

// exp(-dist), stable for all separations: 1/(cosh d + sinh d).
double exp_minus_dist(const UhpPoint& z, const UhpPoint& w);

// Distance from z to a geodesic line; for the vertical axis this is
// asinh(|x|/y), general lines pull back through the conjugator.
double dist_to_line(const UhpPoint& z, const GeodesicLine& line);
double cosh_dist_to_line(const UhpPoint& z, const GeodesicLine& line);

// Geodesic polar coordinates centred at i. theta is the inclination in
// (0, pi) of the Euclidean tangent line at i of the geodesic through i and z,
// so theta(iy) = pi/2.
PolarCoords polar(const UhpPoint& z);

// Cylindrical coordinates rho = log|z|, theta = arg z in (0, pi);
// sin(theta) * cosh dist(z, axis) = 1.
PolarCoords cylindrical(const UhpPoint& z);

// Arclength quadrature nodes along `line` for parameter rho in [0, length]:
// points conjugator(e^rho i) with Gauss-Legendre weights in d rho.
struct LineNodes {
  std::vector<UhpPoint> points;
  std::vector<double> weights;
};
LineNodes geodesic_nodes(const GeodesicLine& line, double length, int n);

// Nodes x_k + i a on the closed horocycle x in [0, 1], Euclidean weights dx.
LineNodes horocycle_nodes(double a, int n);

}  // namespace wck
