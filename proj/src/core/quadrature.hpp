#pragma once

#include <functional>

#include "core/util.hpp"

namespace wck {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_panels = 20000;
  int panel_order = 16;  // Gauss-Legendre points per panel
};

// Nodes and weights on [-1, 1]; cached per order.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int n);

// Nodes/weights mapped onto [a, b].
void map_gauss_legendre(int n, double a, double b, std::vector<double>& x,
                        std::vector<double>& w);

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<Complex(double)>;

// One Gauss-Legendre panel of f over [a, b].
Complex panel_integral(const ComplexFn& f, double a, double b, int order);
double panel_integral(const RealFn& f, double a, double b, int order);

// Integral over [a, b] with panel subdivision doubled until two refinement
// levels agree to tolerance. Throws ErrorCode::convergence past max_panels.
Complex integrate(const ComplexFn& f, double a, double b,
                  const QuadratureConfig& cfg);
double integrate(const RealFn& f, double a, double b,
                 const QuadratureConfig& cfg);

// Integral over [a, infinity) of a non-oscillatory integrand that eventually
// decays at exponential rate `decay_rate` (|f| <= C e^{-decay_rate * x}).
// Panels of geometrically growing width are appended until the analytic tail
// bound extrapolated from the last panel drops below tolerance.
Complex integrate_to_infinity(const ComplexFn& f, double a, double decay_rate,
                              const QuadratureConfig& cfg);

// Integral over [a, infinity) of f(u) * cos(u r) where |f| <= C e^{-lambda u}.
// Panel width never exceeds pi / max(1, |Re r|) so each panel sees at most
// half an oscillation; complex r is allowed while |Im r| < lambda.
Complex cosine_integral(const ComplexFn& f, const Complex& r, double lambda,
                        const QuadratureConfig& cfg, double a = 0.0);

// Same envelope contract, sin(u r) weight.
Complex sine_integral(const ComplexFn& f, const Complex& r, double lambda,
                      const QuadratureConfig& cfg, double a = 0.0);

// Integral over [a, infinity) of f whose envelope decays only algebraically,
// |f(x)| ~ C x^{-p} (p > 1), but which oscillates with known period. The head
// is integrated directly; the tail is summed over half-period slices with
// iterated averaging (Euler transformation) of the alternating series.
Complex oscillatory_tail_integral(const ComplexFn& f, double a,
                                  double half_period, int max_slices,
                                  const QuadratureConfig& cfg,
                                  double* tail_estimate = nullptr);

// Chebyshev interpolant of a smooth function on [a, b]; evaluation by
// Clenshaw recurrence. trailing_error() reports the magnitude of the last
// coefficients as an interpolation-error proxy.
class ChebyshevSeries {
public:
  ChebyshevSeries() = default;
  ChebyshevSeries(const ComplexFn& f, double a, double b, int n);
  Complex operator()(double x) const;
  double trailing_error() const;
  double lo() const { return a_; }
  double hi() const { return b_; }

private:
  double a_ = 0.0;
  double b_ = 1.0;
  std::vector<Complex> coeff_;
};

// Piecewise Chebyshev model on contiguous segments; segment breaks chosen by
// the caller to track scale changes (e.g. exponential decay).
class PiecewiseChebyshev {
public:
  PiecewiseChebyshev() = default;
  PiecewiseChebyshev(const ComplexFn& f, const std::vector<double>& breaks,
                     int n_per_segment);
  Complex operator()(double x) const;
  double trailing_error() const;

private:
  std::vector<double> breaks_;
  std::vector<ChebyshevSeries> segments_;
};

}  // namespace wck
