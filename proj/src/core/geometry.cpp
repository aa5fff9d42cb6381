#include "core/geometry.hpp"

#include <cmath>

namespace wck {

UhpPoint::UhpPoint(double x_, double y_) : x(x_), y(y_) {
  require(std::isfinite(x) && std::isfinite(y), ErrorCode::invalid_argument,
          "non-finite point coordinates");
  require(y > 0.0, ErrorCode::domain, "point must satisfy Im z > 0");
}

MoebiusReal::MoebiusReal(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
  double det = a * d - b * c;
  double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  require(scale > 0.0 && std::isfinite(scale), ErrorCode::invalid_argument,
          "degenerate Moebius entries");
  require(std::abs(det) > 1e-12 * scale * scale, ErrorCode::invalid_argument,
          "Moebius transformation is singular");
  require(det > 0.0, ErrorCode::domain,
          "negative determinant does not preserve the upper half-plane");
  double s = 1.0 / std::sqrt(det);
  a *= s;
  b *= s;
  c *= s;
  d *= s;
}

UhpPoint apply(const MoebiusReal& m, const UhpPoint& z) {
  double cx = m.c * z.x + m.d;
  double denom = cx * cx + m.c * m.c * z.y * z.y;
  double nx = (m.a * z.x + m.b) * cx + m.a * m.c * z.y * z.y;
  return UhpPoint(nx / denom, z.y / denom);
}

double u_invariant(const UhpPoint& z, const UhpPoint& w) {
  double dx = z.x - w.x, dy = z.y - w.y;
  return (dx * dx + dy * dy) / (4.0 * z.y * w.y);
}

double cosh_dist(const UhpPoint& z, const UhpPoint& w) {
  return 1.0 + 2.0 * u_invariant(z, w);
}

double sinh_dist(const UhpPoint& z, const UhpPoint& w) {
  double u = u_invariant(z, w);
  return 2.0 * std::sqrt(u * (u + 1.0));
}

double dist(const UhpPoint& z, const UhpPoint& w) {
  return 2.0 * std::asinh(std::sqrt(u_invariant(z, w)));
}

double exp_minus_dist(const UhpPoint& z, const UhpPoint& w) {
  double u = u_invariant(z, w);
  return 1.0 / (1.0 + 2.0 * u + 2.0 * std::sqrt(u * (u + 1.0)));
}

double dist_to_line(const UhpPoint& z, const GeodesicLine& line) {
  UhpPoint p = apply(line.conjugator.inverse(), z);
  return std::asinh(std::abs(p.x) / p.y);
}

double cosh_dist_to_line(const UhpPoint& z, const GeodesicLine& line) {
  UhpPoint p = apply(line.conjugator.inverse(), z);
  return std::hypot(p.x, p.y) / p.y;
}

PolarCoords polar(const UhpPoint& z) {
  PolarCoords pc;
  pc.rho = dist(z, UhpPoint(0.0, 1.0));
  if (pc.rho == 0.0) return pc;  // direction undefined at the centre
  if (z.x == 0.0) {
    pc.theta = 0.5 * M_PI;
    return pc;
  }
  // Geodesics through i and z are circles centred at (c0, 0) with i on them;
  // the tangent line at i has direction (1, c0).
  double c0 = (z.x * z.x + z.y * z.y - 1.0) / (2.0 * z.x);
  double theta = std::atan2(c0, 1.0);
  if (theta <= 0.0) theta += M_PI;
  pc.theta = theta;
  return pc;
}

PolarCoords cylindrical(const UhpPoint& z) {
  PolarCoords pc;
  pc.rho = 0.5 * std::log(z.x * z.x + z.y * z.y);
  pc.theta = std::atan2(z.y, z.x);
  return pc;
}

LineNodes geodesic_nodes(const GeodesicLine& line, double length, int n) {
  require(length > 0.0, ErrorCode::invalid_argument,
          "geodesic arc length must be positive");
  std::vector<double> rho, w;
  map_gauss_legendre(n, 0.0, length, rho, w);
  LineNodes out;
  out.points.reserve(n);
  for (int i = 0; i < n; ++i)
    out.points.push_back(apply(line.conjugator, UhpPoint(0.0, std::exp(rho[i]))));
  out.weights = std::move(w);
  return out;
}

LineNodes horocycle_nodes(double a, int n) {
  require(a > 0.0, ErrorCode::domain, "horocycle height must be positive");
  std::vector<double> x, w;
  map_gauss_legendre(n, 0.0, 1.0, x, w);
  LineNodes out;
  out.points.reserve(n);
  for (int i = 0; i < n; ++i) out.points.push_back(UhpPoint(x[i], a));
  out.weights = std::move(w);
  return out;
}

}  // namespace wck
