#pragma once

#include <functional>
#include <string>

#include "core/quadrature.hpp"
#include "core/util.hpp"

// Radial transform machinery on the hyperbolic plane: the three-stage
// transform k -> Q -> g -> h between a point-pair kernel k(u) and its
// spherical symbol h(r), its inverse, and the closed-form test functions
// the kernel representations are built from. Conventions:
//   Q(v) = 2 int_0^inf k(v + t^2) dt        (equivalently int_v^inf k/sqrt(u-v))
//   g(u) = 2 Q(sinh^2(u/2))
//   h(r) = 2 int_0^inf g(u) cos(ru) du
namespace wck::selberg {

// k(u) with its growth data. decay_power: |k(u)| = O(u^{-decay_power}) as
// u -> inf; singular_power: |k(u)| = O(u^{-singular_power}) as u -> 0+
// (0 for a kernel regular at the diagonal).
struct RadialKernel {
  ComplexFn eval;
  double decay_power = 0.0;
  double singular_power = 0.0;
  std::string label;
};

// (1 + 2u)^{-s} = cosh^{-s}(distance); regular at u = 0.
RadialKernel cosh_power_kernel(const Complex& s);
// sinh^{-s}(distance) = (4u(u+1))^{-s/2}; singular like u^{-s/2} at u = 0.
RadialKernel sinh_power_kernel(const Complex& s);
RadialKernel custom_kernel(ComplexFn eval, double decay_power,
                           double singular_power, std::string label = "custom");

// Even test function g(u), u >= 0. decay_rate: |g(u)| = O(e^{-decay_rate u}).
// h_decay_rate: exponential decay rate of the transform h when known
// (every built-in family is analytic in |Im u| < pi/2, so its transform
// decays at any rate below pi/2); 0 means unknown. singular_power: g(u) =
// O(u^{-singular_power}) as u -> 0+ (only test_g_elliptic is singular).
struct TestFunction {
  ComplexFn eval;
  double decay_rate = 0.0;
  double h_decay_rate = 0.0;
  double singular_power = 0.0;
  std::string label;
  // Closed form of the inverse-transformed kernel k(u) when one is known
  // ((1 + 2u)^{-s} for the cosh-power family); empty otherwise. k_decay_power
  // is its algebraic decay exponent, used for group-sum tail estimates.
  ComplexFn k_closed;
  double k_decay_power = 0.0;
};

// g_s(u) = sqrt(2 pi) Gamma(s - 1/2) / Gamma(s) cosh^{1/2 - s}(u), Re s > 1.
TestFunction test_g(const Complex& s);
// g_{s,beta}(u) = g_s(u) tanh^beta(u), Re beta > 0.
TestFunction test_g_beta(const Complex& s, const Complex& beta);
// G_{s,beta}(u) = g_s(u) tanh^{beta+1-s}(u) F(1/4, 3/4; s/2+1/2; sech^2 u),
// Re s > 1, Re beta >= 0.  At beta = 0 this reduces to the elliptic test
// function (the tanh exponent then makes u = 0 a genuine singularity).
TestFunction test_G(const Complex& s, const Complex& beta);
// G~_{nu,beta}(u) = g_nu(u) tanh^beta(u) F(nu/2, nu/2+1/2; nu+1/2; sech^2 u),
// Re nu > 1, Re beta >= 0.
TestFunction test_G_tilde(const Complex& nu, const Complex& beta);
// Transform-side test function of the kernel sinh^{-s}(distance); equals
// G_{s,0} pointwise on u > 0 and blows up like u^{1-s} at the origin.
TestFunction test_g_elliptic(const Complex& s);
TestFunction custom_test(ComplexFn eval, double decay_rate,
                         double h_decay_rate = 0.0,
                         std::string label = "custom");

// Closed forms for the cosh-power kernel chain (Re s > 1):
//   Q_s(v) = sqrt(pi/2) Gamma(s-1/2)/Gamma(s) (1 + 2v)^{1/2 - s}
//   h_s(r) = a_{1/2 + i r}(s)  [see a_coeff]
Complex g_closed_form(const Complex& s, double u);
Complex big_q_closed_form(const Complex& s, double v);
Complex h_closed_form(const Complex& s, const Complex& r);

// Independent route to the elliptic test function, kept deliberately distinct
// from test_g_elliptic: prefactor times
// cosh^{1-s}(u/2) sinh^{-s}(u/2) F(1/2, s/2; s; -1/sinh^2(u/2)).
// The hypergeometric argument must lie in (-1, 0], i.e. sinh(u/2) > 1.
Complex g_elliptic_direct(const Complex& s, double u);

// Partial sums of the binomial-type expansions
//   G_{s,beta}(u)  = sum_k (s/2)_k / k!  g_{s+2k,beta}(u)
//   G~_{nu,beta}(u) = sum_k b_k(nu)/k! (nu)_{2k}/(nu-1/2)_{2k}
//                            g_{nu+2k,beta}(u)
// with b_k(nu) = (nu/2)_k ((nu+1)/2)_k / (nu+1/2)_k. In the G~ case the
// bare b_k/k! are the Taylor coefficients of the hypergeometric factor
// against plain cosh powers; expanding against the g's, whose Gamma
// prefactor varies with the index, leaves the extra Pochhammer ratio.
Complex g_series_partial(const Complex& s, const Complex& beta, double u,
                         int terms);
Complex g_tilde_series_partial(const Complex& nu, const Complex& beta,
                               double u, int terms);

// Closed-form ratio h(r, g_s) / h(r, g_{s+2n})
//   = 2^{-2n} (s)_{2n} / [ (s/2 - 1/4 - ir/2)_n (s/2 - 1/4 + ir/2)_n ].
Complex shift_ratio(const Complex& s, const Complex& r, int n);

// Forward transform, first two stages, valid pointwise even for kernels whose
// full transform diverges. big_q requires v > 0 when the kernel is singular
// at u = 0; g requires u > 0 likewise.
struct ForwardStages {
  std::function<Complex(double)> big_q;
  std::function<Complex(double)> g;
};
ForwardStages forward_stages(const RadialKernel& k,
                             const QuadratureConfig& cfg = {});

// Full forward transform evaluated at r. Throws ErrorCode::divergence when
// the kernel singularity makes the final integral diverge (singular_power
// >= 1) or when the decay cannot dominate the oscillation growth.
Complex forward_h(const RadialKernel& k, const Complex& r,
                  const QuadratureConfig& cfg = {});

// h(r) = 2 int_0^inf g(u) cos(ru) du by direct quadrature; requires
// g.decay_rate > |Im r|.
Complex h_transform(const TestFunction& g, const Complex& r,
                    const QuadratureConfig& cfg = {});

// Inverse transform stages from a symbol h given on r >= 0 (extended evenly),
// |h(r)| = O(e^{-h_decay_rate r}) with h_decay_rate > 0:
//   g(u)  = (1/pi) int_0^inf h(r) cos(ur) dr
//   Q(v)  = g(2 asinh sqrt v) / 2
//   k(u)  = -(1/pi) int_0^inf g'(2 asinh sqrt(u+t^2))
//                     / sqrt((u+t^2)(u+t^2+1)) dt.
// g_decay_rate bounds the decay of the reconstructed g (used to truncate the
// last integral). Every evaluator quadratures on demand.
struct InverseStages {
  std::function<Complex(double)> g;
  std::function<Complex(double)> g_prime;
  std::function<Complex(double)> big_q;
  std::function<Complex(double)> k;
};
InverseStages inverse_stages(std::function<Complex(double)> h,
                             double h_decay_rate, double g_decay_rate,
                             const QuadratureConfig& cfg = {});

// Same chain with Chebyshev caches on h and g' so that k can be evaluated
// at many points cheaply. `tol` steers the cache truncation radii.
struct CachedInverse {
  std::function<Complex(double)> h;        // cached model of the input
  std::function<Complex(double)> g;        // pointwise cosine transform
  std::function<Complex(double)> g_prime;  // cached
  std::function<Complex(double)> k;
  double h_radius = 0.0;  // h treated as 0 beyond this point
  double g_radius = 0.0;  // g' treated as 0 beyond this point
};
CachedInverse cached_inverse(std::function<Complex(double)> h,
                             double h_decay_rate, double g_decay_rate,
                             double tol, const QuadratureConfig& cfg = {});

}  // namespace wck::selberg
