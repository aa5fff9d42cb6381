#pragma once

#include <vector>

#include "core/geometry.hpp"
#include "core/kernels.hpp"
#include "core/modular.hpp"
#include "core/quadrature.hpp"
#include "core/util.hpp"

// Eisenstein series attached to the three conjugacy types of PSL(2,Z):
// parabolic (cusp at infinity), hyperbolic (a closed geodesic), elliptic
// (a cone point). Each comes in its defining-sum form plus the alternative
// representations the identity checks compare against.
namespace wck {

enum class EisensteinRep {
  direct,              // defining coset sum
  k_series,            // binomial expansion through the cosh-power kernels
  geodesic_integral,   // arclength average of K_s over the closed geodesic
  horocycle_integral,  // average of G_s over a closed horocycle
};

struct EisensteinValue {
  Complex value{0.0, 0.0};
  double tail_estimate = 0.0;
  EisensteinRep representation = EisensteinRep::direct;
  long long terms_used = 0;
};

// Parabolic series sum Im(eta z)^s over Gamma_infty \ Gamma, Re s > 1.
// The sum runs over rows 1 <= c <= window with d in the z-covariant window
// |d + c x| <= window, so translating z by an integer reindexes the sum
// exactly and periodicity holds to the bit. tail_estimate is the analytic
// bound for the two discarded regimes (|d + cx| > window and c > window).
EisensteinValue eisenstein_parabolic(const UhpPoint& z, const Complex& s,
                                     int window);

// Hyperbolic series sum cosh^{-s} dist(eta z, axis) over <gamma> \ Gamma.
EisensteinValue eisenstein_hyperbolic(const UhpPoint& z, const Complex& s,
                                      const HyperbolicClassData& data,
                                      double bound);
EisensteinValue eisenstein_hyperbolic(const UhpPoint& z, const Complex& s,
                                      const HyperbolicClassData& data,
                                      const std::vector<GroupElement>& cosets);

// Elliptic series sum sinh^{-s} dist(eta z, w) over Gamma_w \ Gamma. Throws
// ErrorCode::singularity when some eta z comes within 1e-3 of w.
EisensteinValue eisenstein_elliptic(const UhpPoint& z, const Complex& s,
                                    const EllipticPointData& data,
                                    double bound);
EisensteinValue eisenstein_elliptic(const UhpPoint& z, const Complex& s,
                                    const EllipticPointData& data,
                                    const std::vector<GroupElement>& cosets);

// Binomial route to the elliptic series: per coset,
//   sinh^{-s} = sum_k (s/2)_k / k! cosh^{-(s+2k)},
// summed level by level so the result matches sum_k (s/2)_k/k! K_{s+2k}
// restricted to the coset representatives (the full-group kernel sum equals
// ord(w) times this). tail_estimate combines the k-series remainder with the
// group-ball tail.
EisensteinValue elliptic_k_series(const UhpPoint& z, const Complex& s,
                                  const EllipticPointData& data,
                                  const TruncationBudget& budget);

// Arclength route to the hyperbolic series:
//   E(z, s) = Gamma(s) 2^{1-s} / Gamma(s/2)^2
//             * int_0^length K_s(z, axis(rho)) d rho.
// The K_s values are fresh group sums, so this route shares nothing with
// the coset reduction of the direct form. tail_estimate combines the
// per-node group tails with a quadrature-refinement delta.
EisensteinValue hyperbolic_via_integral(const UhpPoint& z, const Complex& s,
                                        const HyperbolicClassData& data,
                                        const TruncationBudget& budget,
                                        const QuadratureConfig& cfg = {});

// Horocycle route to the parabolic series:
//   E(z, s) = (2s - 1) a^{s-1} int_0^1 G_s(z, x + i a) dx
// for a horocycle at height a above the orbit of z. height_scaled selects
// the variant normalisation that divides the average by the height (the two
// conventions for this identity differ by exactly that factor; the default
// is the one the cross-checks validate).
EisensteinValue parabolic_via_horocycle(const UhpPoint& z, const Complex& s,
                                        double height,
                                        const TruncationBudget& budget,
                                        const QuadratureConfig& cfg = {},
                                        bool height_scaled = false);

}  // namespace wck
