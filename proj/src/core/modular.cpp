#include "core/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace wck {

namespace {

void canonicalize(int64_t& a, int64_t& b, int64_t& c, int64_t& d) {
  int64_t lead = c != 0 ? c : (d != 0 ? d : a);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
}

}  // namespace

GroupElement::GroupElement(int64_t a_, int64_t b_, int64_t c_, int64_t d_)
    : a(a_), b(b_), c(c_), d(d_) {
  require(a * d - b * c == 1, ErrorCode::invalid_argument,
          "matrix is not unimodular");
  canonicalize(a, b, c, d);
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  return GroupElement(a * o.a + b * o.c, a * o.b + b * o.d,
                      c * o.a + d * o.c, c * o.b + d * o.d);
}

GroupElement GroupElement::inverse() const {
  return GroupElement(d, -b, -c, a);
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  if (c != o.c) return c < o.c;
  return d < o.d;
}

size_t GroupElementHash::operator()(const GroupElement& g) const {
  uint64_t h = 1469598103934665603ull;
  for (int64_t v : {g.a, g.b, g.c, g.d}) {
    h ^= static_cast<uint64_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

void for_each_element(double bound,
                      const std::function<void(const GroupElement&)>& fn) {
  require(bound >= std::sqrt(2.0), ErrorCode::invalid_argument,
          "bound below the identity's Frobenius norm");
  require(bound < 3.0e9, ErrorCode::resource, "enumeration bound too large");
  int64_t n2 = static_cast<int64_t>(std::floor(bound * bound + 1e-9));
  int64_t cmax = static_cast<int64_t>(std::floor(std::sqrt(double(n2))));
  for (int64_t c = 0; c <= cmax; ++c) {
    // c = 0: only (a, d) = (1, 1), b free.
    if (c == 0) {
      int64_t bmax = static_cast<int64_t>(std::floor(std::sqrt(double(n2 - 2))));
      for (int64_t b = -bmax; b <= bmax; ++b)
        if (2 + b * b <= n2) fn(GroupElement(1, b, 0, 1));
      continue;
    }
    int64_t dmax = static_cast<int64_t>(std::floor(std::sqrt(double(n2 - c * c))));
    for (int64_t d = -dmax; d <= dmax; ++d) {
      if (std::gcd(c, d) != 1) continue;
      if (c == 0 && d < 0) continue;
      // Base solution of a*d - b*c = 1, then the family a = a0 + t c,
      // b = b0 + t d; scan t outward from the norm minimiser.
      int64_t a0 = 0, b0 = 0;
      {
        int64_t old_r = d, r = c, old_s = 1, s = 0;
        while (r != 0) {
          int64_t qq = old_r / r;
          std::swap(old_r -= qq * r, r);
          std::swap(old_s -= qq * s, s);
        }
        // old_s * d === old_r (mod c), old_r = +-gcd = +-1
        if (old_r == 1) {
          a0 = old_s;
        } else {
          a0 = -old_s;
        }
        b0 = (a0 * d - 1) / c;
      }
      int64_t rem = n2 - c * c - d * d;
      if (rem < 0) continue;
      double tc = -double(a0 * c + b0 * d) / double(c * c + d * d);
      int64_t t0 = static_cast<int64_t>(std::llround(tc));
      for (int dir : {0, 1}) {
        for (int64_t k = dir;; ++k) {
          int64_t t = dir == 0 ? t0 - k : t0 + k;
          int64_t a = a0 + t * c, b = b0 + t * d;
          if (a * a + b * b > rem) break;
          fn(GroupElement(a, b, c, d));
        }
      }
    }
  }
}

std::vector<GroupElement> enumerate_elements(double bound, size_t cap) {
  std::vector<GroupElement> out;
  for_each_element(bound, [&](const GroupElement& g) {
    out.push_back(g);
    require(out.size() <= cap, ErrorCode::resource,
            "element enumeration exceeds configured cardinality cap");
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GroupElement> parabolic_cosets(int q) {
  require(q >= 0, ErrorCode::invalid_argument, "negative coset depth");
  std::vector<GroupElement> out;
  out.push_back(GroupElement(1, 0, 0, 1));  // (c, d) = (0, 1)
  for (int64_t c = 1; c <= q; ++c) {
    for (int64_t d = -q; d <= q; ++d) {
      if (std::gcd(c, std::abs(d)) != 1) continue;
      int64_t old_r = d, r = c, old_s = 1, s = 0;
      while (r != 0) {
        int64_t qq = old_r / r;
        std::swap(old_r -= qq * r, r);
        std::swap(old_s -= qq * s, s);
      }
      int64_t a0 = old_r == 1 ? old_s : -old_s;
      int64_t b0 = (a0 * d - 1) / c;
      double tc = -double(a0 * c + b0 * d) / double(c * c + d * d);
      int64_t t = static_cast<int64_t>(std::llround(tc));
      int64_t best_a = a0 + t * c, best_b = b0 + t * d;
      for (int64_t dt : {-1, 1}) {
        int64_t aa = a0 + (t + dt) * c, bb = b0 + (t + dt) * d;
        if (aa * aa + bb * bb < best_a * best_a + best_b * best_b) {
          best_a = aa;
          best_b = bb;
        }
      }
      out.push_back(GroupElement(best_a, best_b, c, d));
    }
  }
  return out;
}

namespace {

// Window position of a coset representative along the axis of `data`.
double axis_position(const HyperbolicClassData& data, const GroupElement& eta,
                     const UhpPoint& z0) {
  UhpPoint p = apply(data.scaling.inverse(),
                     apply(eta.as_moebius(), z0));
  return 0.5 * std::log(p.x * p.x + p.y * p.y);
}

GroupElement integer_power(const GroupElement& g, int64_t n) {
  GroupElement acc;  // identity
  GroupElement base = n >= 0 ? g : g.inverse();
  int64_t k = std::llabs(n);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace

std::vector<GroupElement> hyperbolic_cosets(const HyperbolicClassData& data,
                                            double bound) {
  const UhpPoint z0(0.0, 2.0);
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<GroupElement> out;
  for_each_element(bound, [&](const GroupElement& eta) {
    double pos = axis_position(data, eta, z0);
    int64_t k = static_cast<int64_t>(std::floor(pos / data.length));
    GroupElement reduced = integer_power(data.gamma, -k) * eta;
    if (seen.insert(reduced).second) out.push_back(reduced);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> elliptic_cosets(const EllipticPointData& data,
                                          double bound) {
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<GroupElement> out;
  for_each_element(bound, [&](const GroupElement& eta) {
    GroupElement rep = eta;
    GroupElement rotated = eta;
    for (int j = 1; j < data.order; ++j) {
      rotated = data.generator * rotated;
      if (rotated < rep) rep = rotated;
    }
    if (seen.insert(rep).second) out.push_back(rep);
  });
  std::sort(out.begin(), out.end());
  return out;
}

const StandardFixtures& standard_fixtures() {
  static const StandardFixtures fixtures = [] {
    StandardFixtures f;

    // gamma = (2,1;1,1): trace 3, fixed points (1 +- sqrt5)/2. The scaling
    // matrix sends infinity to the attracting point (1+sqrt5)/2 and 0 to the
    // repelling one, so scaling^{-1} gamma scaling = diag(e^{l/2}, e^{-l/2}).
    f.gamma_21_11.gamma = GroupElement(2, 1, 1, 1);
    f.gamma_21_11.length = 2.0 * std::acosh(1.5);
    double phi = 0.5 * (1.0 + std::sqrt(5.0));
    f.gamma_21_11.scaling = MoebiusReal(phi, -1.0 / phi, 1.0, 1.0);

    f.at_i.point = UhpPoint(0.0, 1.0);
    f.at_i.order = 2;
    f.at_i.generator = GroupElement(0, -1, 1, 0);
    f.at_i.scaling = MoebiusReal(1.0, 0.0, 0.0, 1.0);

    double ry = 0.5 * std::sqrt(3.0);
    f.at_rho.point = UhpPoint(0.5, ry);
    f.at_rho.order = 3;
    f.at_rho.generator = GroupElement(1, -1, 1, 0);
    double rs = std::sqrt(ry);
    f.at_rho.scaling = MoebiusReal(rs, 0.5 / rs, 0.0, 1.0 / rs);

    f.infinity.scaling = MoebiusReal(1.0, 0.0, 0.0, 1.0);
    f.infinity.width = 1.0;
    f.infinity.generator = GroupElement(1, 1, 0, 1);
    return f;
  }();
  return fixtures;
}

}  // namespace wck
