#include "core/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/specfun.hpp"

namespace wck {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

EisensteinValue eisenstein_parabolic(const UhpPoint& z, const Complex& s,
                                     int window) {
  require(s.real() > 1.0, ErrorCode::domain,
          "parabolic series requires Re s > 1");
  require(window >= 1, ErrorCode::invalid_argument,
          "parabolic window must be >= 1");
  const double sig = s.real();
  const double y = z.y;
  const double w = double(window);

  Accumulator acc;
  acc.add(pow_minus(1.0 / y, s));  // the c = 0 coset: Im(z)^s
  long long n = 1;
  for (int64_t c = 1; c <= window; ++c) {
    const double cx = double(c) * z.x;
    const double cy2 = double(c) * double(c) * y * y;
    // z-covariant window: integer translation of z shifts [dlo, dhi] by an
    // exact integer, so the included coset set is translation-stable.
    const int64_t dlo = (int64_t)std::ceil(-cx - w);
    const int64_t dhi = (int64_t)std::floor(-cx + w);
    for (int64_t d = dlo; d <= dhi; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const double t = cx + double(d);
      acc.add(pow_minus((t * t + cy2) / y, s));
      ++n;
    }
  }

  // Discarded mass: |d + cx| > w at c <= w, plus every row c > w (the d-sum
  // there is a full line, integral-comparable). Factor 2: sum vs integral.
  const double a_part =
      2.0 * std::pow(y, sig) * std::pow(w, 2.0 - 2.0 * sig) / (2.0 * sig - 1.0);
  const double b_part = std::pow(y, 1.0 - sig) * std::sqrt(kPi) *
                        std::tgamma(sig - 0.5) / std::tgamma(sig) *
                        std::pow(w, 2.0 - 2.0 * sig) / (2.0 * sig - 2.0);

  EisensteinValue out;
  out.value = acc.value();
  out.tail_estimate = 2.0 * (a_part + b_part);
  out.representation = EisensteinRep::direct;
  out.terms_used = n;
  return out;
}

EisensteinValue eisenstein_hyperbolic(const UhpPoint& z, const Complex& s,
                                      const HyperbolicClassData& data,
                                      const std::vector<GroupElement>& cosets) {
  require(s.real() > 1.0, ErrorCode::domain,
          "hyperbolic series requires Re s > 1");
  const GeodesicLine axis = data.axis();
  Accumulator acc;
  ShellTail shells;
  for (const auto& eta : cosets) {
    const UhpPoint zz = apply(eta.as_moebius(), z);
    const double ch = cosh_dist_to_line(zz, axis);
    const Complex term = pow_minus(ch, s);
    acc.add(term);
    shells.add(std::acosh(std::max(1.0, ch)), std::abs(term));
  }
  EisensteinValue out;
  out.value = acc.value();
  out.tail_estimate = shells.estimate(s.real());
  out.representation = EisensteinRep::direct;
  out.terms_used = (long long)cosets.size();
  return out;
}

EisensteinValue eisenstein_hyperbolic(const UhpPoint& z, const Complex& s,
                                      const HyperbolicClassData& data,
                                      double bound) {
  return eisenstein_hyperbolic(z, s, data, hyperbolic_cosets(data, bound));
}

EisensteinValue eisenstein_elliptic(const UhpPoint& z, const Complex& s,
                                    const EllipticPointData& data,
                                    const std::vector<GroupElement>& cosets) {
  require(s.real() > 1.0, ErrorCode::domain,
          "elliptic series requires Re s > 1");
  Accumulator acc;
  ShellTail shells;
  for (const auto& eta : cosets) {
    const UhpPoint zz = apply(eta.as_moebius(), z);
    const double sh = sinh_dist(zz, data.point);
    require(sh > 1e-3, ErrorCode::singularity,
            "elliptic series: z lies on the orbit of the cone point");
    const Complex term = pow_minus(sh, s);
    acc.add(term);
    shells.add(dist(zz, data.point), std::abs(term));
  }
  EisensteinValue out;
  out.value = acc.value();
  out.tail_estimate = shells.estimate(s.real());
  out.representation = EisensteinRep::direct;
  out.terms_used = (long long)cosets.size();
  return out;
}

EisensteinValue eisenstein_elliptic(const UhpPoint& z, const Complex& s,
                                    const EllipticPointData& data,
                                    double bound) {
  return eisenstein_elliptic(z, s, data, elliptic_cosets(data, bound));
}

EisensteinValue elliptic_k_series(const UhpPoint& z, const Complex& s,
                                  const EllipticPointData& data,
                                  const TruncationBudget& budget) {
  require(s.real() > 1.0, ErrorCode::domain,
          "elliptic series requires Re s > 1");
  const auto cosets = elliptic_cosets(data, budget.group_bound);
  std::vector<Complex> base;
  std::vector<double> mul;
  base.reserve(cosets.size());
  mul.reserve(cosets.size());
  ShellTail shells;
  for (const auto& eta : cosets) {
    const UhpPoint zz = apply(eta.as_moebius(), z);
    const double sh = sinh_dist(zz, data.point);
    require(sh > 1e-3, ErrorCode::singularity,
            "elliptic series: z lies on the orbit of the cone point");
    const double ch = cosh_dist(zz, data.point);
    base.push_back(pow_minus(ch, s));
    mul.push_back(1.0 / (ch * ch));
    shells.add(dist(zz, data.point), std::abs(base.back()));
  }

  Accumulator acc;
  Complex coeff = 1.0;  // (s/2)_k / k!
  double prev_mag = 0.0, last_mag = 0.0;
  for (int k = 0; k <= budget.series_kmax; ++k) {
    Accumulator level;
    for (size_t i = 0; i < base.size(); ++i) {
      level.add(coeff * base[i]);
      base[i] *= mul[i];
    }
    const Complex term = level.value();
    acc.add(term);
    prev_mag = last_mag;
    last_mag = std::abs(term);
    coeff *= (s * 0.5 + double(k)) / double(k + 1);
  }
  const double r = prev_mag > 0.0 ? std::min(0.95, last_mag / prev_mag) : 0.5;

  EisensteinValue out;
  out.value = acc.value();
  out.tail_estimate = shells.estimate(s.real()) + last_mag * r / (1.0 - r);
  out.representation = EisensteinRep::k_series;
  out.terms_used = (long long)cosets.size();
  enforce_tail_policy(budget, out.tail_estimate, "elliptic_k_series");
  return out;
}

EisensteinValue hyperbolic_via_integral(const UhpPoint& z, const Complex& s,
                                        const HyperbolicClassData& data,
                                        const TruncationBudget& budget,
                                        const QuadratureConfig& cfg) {
  (void)cfg;
  require(s.real() > 1.0, ErrorCode::domain,
          "hyperbolic series requires Re s > 1");
  // one ball shared by every arc node
  const auto elements = enumerate_elements(budget.group_bound);
  long long terms = 0;
  auto arc_integral = [&](int n) {
    const LineNodes nodes = geodesic_nodes(data.axis(), data.length, n);
    Accumulator acc;
    double group_tail = 0.0;
    for (size_t j = 0; j < nodes.points.size(); ++j) {
      const KernelValue kv = automorphic_K(z, nodes.points[j], s, elements);
      acc.add(kv.value * nodes.weights[j]);
      group_tail += kv.tail_estimate * nodes.weights[j];
      terms += kv.terms_used;
    }
    return std::make_pair(acc.value(), group_tail);
  };
  const auto fine = arc_integral(64);
  const auto coarse = arc_integral(32);

  // int_R cosh^{-s} = 2^{s-1} Gamma(s/2)^2 / Gamma(s): the arclength average
  // of K_s reproduces the series up to exactly that constant.
  const Complex norm =
      gamma_fn(s) * pow_minus(2.0, s - 1.0) /
      (gamma_fn(s * 0.5) * gamma_fn(s * 0.5));

  EisensteinValue out;
  out.value = norm * fine.first;
  out.tail_estimate =
      std::abs(norm) * (fine.second + std::abs(fine.first - coarse.first));
  out.representation = EisensteinRep::geodesic_integral;
  out.terms_used = terms;
  enforce_tail_policy(budget, out.tail_estimate, "hyperbolic_via_integral");
  return out;
}

EisensteinValue parabolic_via_horocycle(const UhpPoint& z, const Complex& s,
                                        double height,
                                        const TruncationBudget& budget,
                                        const QuadratureConfig& cfg,
                                        bool height_scaled) {
  (void)cfg;
  require(s.real() > 1.0, ErrorCode::domain,
          "parabolic series requires Re s > 1");
  require(height > std::max(2.0, 2.0 * z.y), ErrorCode::domain,
          "horocycle must lie above the orbit of z");
  // one ball shared by every horocycle node
  const auto elements = enumerate_elements(budget.group_bound);
  long long terms = 0;
  auto average = [&](int n) {
    const LineNodes nodes = horocycle_nodes(height, n);
    Accumulator acc;
    double group_tail = 0.0;
    for (size_t j = 0; j < nodes.points.size(); ++j) {
      const KernelValue gv = greens_function(z, nodes.points[j], s, elements);
      acc.add(gv.value * nodes.weights[j]);
      group_tail += gv.tail_estimate * nodes.weights[j];
      terms += gv.terms_used;
    }
    return std::make_pair(acc.value(), group_tail);
  };
  const auto fine = average(48);
  const auto coarse = average(24);

  Complex prefactor = (2.0 * s - 1.0) * pow_minus(1.0 / height, s - 1.0);
  if (height_scaled) prefactor *= height;

  EisensteinValue out;
  out.value = prefactor * fine.first;
  out.tail_estimate = std::abs(prefactor) *
                      (fine.second + std::abs(fine.first - coarse.first));
  out.representation = EisensteinRep::horocycle_integral;
  out.terms_used = terms;
  enforce_tail_policy(budget, out.tail_estimate, "parabolic_via_horocycle");
  return out;
}

}  // namespace wck
