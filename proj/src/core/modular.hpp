#pragma once

#include <functional>

#include "core/geometry.hpp"
#include "core/util.hpp"

namespace wck {

// Element of PSL(2,Z) with integer entries, det = 1, canonical sign: the
// first nonzero of (c, d, a) is positive. Equality and hashing act on the
// canonical form.
struct GroupElement {
  int64_t a = 1, b = 0, c = 0, d = 1;

  GroupElement() = default;
  GroupElement(int64_t a_, int64_t b_, int64_t c_, int64_t d_);

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  bool operator==(const GroupElement& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator<(const GroupElement& o) const;
  int64_t frobenius_sq() const { return a * a + b * b + c * c + d * d; }
  MoebiusReal as_moebius() const {
    return MoebiusReal(double(a), double(b), double(c), double(d));
  }
};

struct GroupElementHash {
  size_t operator()(const GroupElement& g) const;
};

// Primitive hyperbolic class. scaling maps the vertical axis onto the axis
// of `gamma`; scaling^{-1} gamma scaling = diag(e^{l/2}, e^{-l/2}).
struct HyperbolicClassData {
  GroupElement gamma;
  double length = 0.0;  // l = 2 acosh(tr/2)
  MoebiusReal scaling;
  GeodesicLine axis() const { return GeodesicLine{scaling}; }
};

struct EllipticPointData {
  UhpPoint point;
  int order = 1;
  GroupElement generator;  // generator^order = identity in PSL(2,Z)
  MoebiusReal scaling;     // maps i to `point`
};

struct CuspData {
  MoebiusReal scaling;  // identity for the cusp at infinity
  double width = 1.0;
  GroupElement generator;  // unit translation conjugated to the cusp
};

// All elements with Frobenius norm squared <= bound^2, one per +-pair,
// sorted canonically. Throws ErrorCode::resource past `cap` elements.
std::vector<GroupElement> enumerate_elements(double bound,
                                             size_t cap = 4000000);

// Streaming variant for group sums too large to materialise. Visit order is
// deterministic: (c, d, t) lexicographic over the solution family
// (a, b) = (a0 + t c, b0 + t d).
void for_each_element(double bound,
                      const std::function<void(const GroupElement&)>& fn);

// Coset representatives of Gamma_infty \ Gamma: bottom rows (c, d) with
// gcd(c, d) = 1, c = 0 contributing only (0, 1), and 1 <= c <= q with
// |d| <= q. Top rows minimise a^2 + b^2.
std::vector<GroupElement> parabolic_cosets(int q);

// Coset representatives of <gamma> \ Gamma from the Frobenius ball: each
// element is reduced so that log|scaling^{-1} eta z0| lies in [0, length),
// z0 = 2i, then deduplicated.
std::vector<GroupElement> hyperbolic_cosets(const HyperbolicClassData& data,
                                            double bound);

// Coset representatives of Gamma_w \ Gamma from the Frobenius ball; the
// representative of a coset is the canonically smallest matrix in its
// stabiliser orbit {generator^j eta}.
std::vector<GroupElement> elliptic_cosets(const EllipticPointData& data,
                                          double bound);

struct StandardFixtures {
  HyperbolicClassData gamma_21_11;  // (2,1;1,1), trace 3
  EllipticPointData at_i;           // order 2
  EllipticPointData at_rho;         // e^{i pi/3}, order 3
  CuspData infinity;
  UhpPoint z0{0.0, 2.0};  // default evaluation point
  UhpPoint w0{1.0, 1.0};  // default second point
};
const StandardFixtures& standard_fixtures();

}  // namespace wck
