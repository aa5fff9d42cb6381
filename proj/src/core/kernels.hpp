#pragma once

#include <vector>

#include "core/geometry.hpp"
#include "core/modular.hpp"
#include "core/quadrature.hpp"
#include "core/selberg.hpp"
#include "core/util.hpp"

// Kernels on the hyperbolic plane and their periodizations over PSL(2,Z):
// the cosh-power kernel K_s, heat kernels, translated Poisson kernels, the
// resolvent (Green's) kernel G_s, the hypergeometric kernel family, the
// geometric wave action of a radial test function, and the vertical-contour
// representation of G_s.
namespace wck {

enum class TailPolicy {
  estimate_and_report,  // always return, tail_estimate carries the bound
  fail_if_above,        // throw ErrorCode::convergence when tail > tolerance
};

struct TruncationBudget {
  double group_bound = 40.0;  // Frobenius-norm radius of the element ball
  int series_kmax = 60;       // cap on auxiliary series (k-expansions)
  TailPolicy tail_policy = TailPolicy::estimate_and_report;
  double tail_tolerance = 0.0;
};

struct KernelValue {
  Complex value{0.0, 0.0};
  double tail_estimate = 0.0;
  long long terms_used = 0;
};

// Group-sum tail estimator shared by the periodized kernels. Terms are
// binned into unit shells of the relevant distance; the outermost full
// shell is extrapolated geometrically with ratio
//   q = e * (per-unit-distance term decay),
// the factor e accounting for the exponential orbit count per shell. A
// margin factor of 3 covers shell-count fluctuation; the estimator is
// validated empirically by the monotone-truncation property tests.
class ShellTail {
public:
  void add(double distance, double magnitude);
  // decay_sigma: |term| ~ C e^{-decay_sigma * distance}. Requires sigma > 1
  // for a finite estimate; returns +inf otherwise.
  double estimate(double decay_sigma) const;
  bool empty() const { return bins_.empty(); }
  // Frontier data for kernels with non-constant shell ratios (heat).
  double last_mass() const;
  int last_index() const;

private:
  std::vector<double> bins_;
};

void enforce_tail_policy(const TruncationBudget& budget, double tail,
                         const char* what);

// K_s(z, w) = sum_eta cosh^{-s} dist(z, eta w), Re s > 1.
KernelValue automorphic_K(const UhpPoint& z, const UhpPoint& w,
                          const Complex& s, const TruncationBudget& budget);
// Same sum over a caller-fixed element list. Identity checks whose two sides
// share a list make the truncation error cancel exactly.
KernelValue automorphic_K(const UhpPoint& z, const UhpPoint& w,
                          const Complex& s,
                          const std::vector<GroupElement>& elements);

// Heat kernel on the plane,
//   (1/4pi) int_R r tanh(pi r) e^{-(r^2+1/4) t} P_{-1/2+ir}(cosh d) dr,
// by even-symmetry quadrature on [0, R(t)] with R(t) set by the Gaussian
// factor. The integral computes e^{-d^2/4t}-small values from an
// e^{-d/2}-sized oscillatory integrand, so relative accuracy degrades like
// eps * e^{d^2/4t - d/2}; callers in that regime get the value the formula
// yields, and the periodized sum below accounts for it (the affected terms
// are exactly the negligible ones).
double heat_kernel_plane_radial(double distance, double t,
                                const QuadratureConfig& cfg = {});
double heat_kernel_plane(const UhpPoint& z, const UhpPoint& w, double t,
                         const QuadratureConfig& cfg = {});

// K_M(z, w; t) = sum_eta K_H(z, eta w; t). Large element lists evaluate
// through a Chebyshev model of log K_H(., t) fitted once per call.
KernelValue heat_kernel_M(const UhpPoint& z, const UhpPoint& w, double t,
                          const TruncationBudget& budget,
                          const QuadratureConfig& cfg = {});

enum class KernelDomain { plane, surface };

// Translated Poisson kernel
//   P(z, w; u) = (u / sqrt(4 pi)) int_0^inf K(z,w;t) e^{-Z t} e^{-u^2/4t}
//                t^{-3/2} dt,
// K the plane or surface heat kernel. Requires Re u > 0 and Re(u^2) > 0;
// Re Z >= -1/4 on the plane (the -1/4 translate), Re Z >= 0 on the surface.
// Surface values carry a truncation deficit from the t-tail mass of the
// constant mode that a finite element ball cannot reach; it is returned in
// *tail_deficit when requested.
Complex poisson_kernel(const UhpPoint& z, const UhpPoint& w, const Complex& u,
                       const Complex& Z, KernelDomain on,
                       const TruncationBudget& budget,
                       const QuadratureConfig& cfg = {},
                       double* tail_deficit = nullptr);

// Scalar model of the same G-transform: both sides of
//   (u/sqrt(4 pi)) int_0^inf e^{-a t} e^{-u^2/4t} t^{-3/2} dt = e^{-u sqrt a}
// (principal square root, Re a > 0).
Complex poisson_scalar_integral(const Complex& a, const Complex& u,
                                const QuadratureConfig& cfg = {});
Complex poisson_scalar_closed(const Complex& a, const Complex& u);

// G_s(z, w) = (1/2pi) sum_eta Q_{s-1}(1 + 2 u(z, eta w)), Re s > 1.
// Throws ErrorCode::singularity when the ball finds z on the orbit of w.
KernelValue greens_function(const UhpPoint& z, const UhpPoint& w,
                            const Complex& s, const TruncationBudget& budget);
KernelValue greens_function(const UhpPoint& z, const UhpPoint& w,
                            const Complex& s,
                            const std::vector<GroupElement>& elements);

// Hypergeometric kernel, direct form (Re nu > 1):
//   sum_eta cosh^{-nu}(d) F(nu/2, nu/2+1/2; nu+1/2; cosh^{-2} d),
// each term evaluated in the exponential-argument form that stays stable on
// vertical contours.
KernelValue hypergeom_kernel(const UhpPoint& z, const UhpPoint& w,
                             const Complex& nu,
                             const TruncationBudget& budget);
KernelValue hypergeom_kernel(const UhpPoint& z, const UhpPoint& w,
                             const Complex& nu,
                             const std::vector<GroupElement>& elements);
// Cross-check form: sum_k b_k(nu)/k! K_{nu+2k}(z, w) over the same ball.
KernelValue hypergeom_kernel_series(const UhpPoint& z, const UhpPoint& w,
                                    const Complex& nu,
                                    const TruncationBudget& budget);

enum class WaveMode {
  auto_select,  // shortcut when a closed-form k is attached, else pipeline
  pipeline,     // quadrature chain h = H(., g) -> inverse transform -> k
  shortcut,     // closed-form k attached to the test function; error if absent
};

// Geometric wave action sum_eta k(z, eta w) where k is the inverse
// transform of r -> H(r, g). Admissibility: g.decay_rate > 1/2 and a known
// positive decay rate for H(., g).
KernelValue wave_action(const UhpPoint& z, const UhpPoint& w,
                        const selberg::TestFunction& g,
                        const TruncationBudget& budget,
                        const QuadratureConfig& cfg = {},
                        WaveMode mode = WaveMode::auto_select);

struct ContourPartial {
  double height = 0.0;  // symmetric truncation |Im nu| <= height
  Complex value{0.0, 0.0};
};

struct GreensContourResult {
  Complex value{0.0, 0.0};    // full-height integral
  double contour_tail = 0.0;  // geometric extrapolation from the partials
  double group_tail = 0.0;
  std::vector<ContourPartial> partials;  // heights T/4, T/2, T
  long long terms_used = 0;
};

// Vertical-contour representation of the Green's function,
//   G_s(z, w) = int_{Re nu = 1+delta} c(nu) / ((s-1/2)^2 - (1/2-nu)^2)
//               * sum_eta [hypergeometric kernel term](nu) dnu,
// integrated over |Im nu| <= T without exploiting conjugate symmetry, so a
// vanishing imaginary part is a genuine output check. Partial values at
// T/4 and T/2 expose the algebraic tail decay.
GreensContourResult greens_contour(const UhpPoint& z, const UhpPoint& w,
                                   const Complex& s, double delta, double T,
                                   const TruncationBudget& budget,
                                   const QuadratureConfig& cfg = {});

}  // namespace wck
