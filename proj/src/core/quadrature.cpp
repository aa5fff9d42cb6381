#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace wck {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  // Newton iteration on P_n with the asymptotic root estimate as seed.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[n - 1 - i] = gl.weights[i];
  }
  return gl;
}

std::map<int, GaussLegendre> gl_cache;
std::mutex gl_mutex;

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  require(n >= 1 && n <= 256, ErrorCode::invalid_argument,
          "Gauss-Legendre order out of range");
  std::lock_guard<std::mutex> lock(gl_mutex);
  auto it = gl_cache.find(n);
  if (it == gl_cache.end()) it = gl_cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

void map_gauss_legendre(int n, double a, double b, std::vector<double>& x,
                        std::vector<double>& w) {
  const GaussLegendre& gl = gauss_legendre(n);
  x.resize(n);
  w.resize(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    x[i] = mid + half * gl.nodes[i];
    w[i] = half * gl.weights[i];
  }
}

Complex panel_integral(const ComplexFn& f, double a, double b, int order) {
  const GaussLegendre& gl = gauss_legendre(order);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Accumulator acc;
  for (int i = 0; i < order; ++i)
    acc.add(f(mid + half * gl.nodes[i]) * (half * gl.weights[i]));
  return acc.value();
}

double panel_integral(const RealFn& f, double a, double b, int order) {
  const GaussLegendre& gl = gauss_legendre(order);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Accumulator acc;
  for (int i = 0; i < order; ++i)
    acc.add(f(mid + half * gl.nodes[i]) * (half * gl.weights[i]));
  return acc.real();
}

namespace {

Complex integrate_fixed(const ComplexFn& f, double a, double b, int panels,
                        int order) {
  Accumulator acc;
  double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i)
    acc.add(panel_integral(f, a + i * h, a + (i + 1) * h, order));
  return acc.value();
}

}  // namespace

Complex integrate(const ComplexFn& f, double a, double b,
                  const QuadratureConfig& cfg) {
  if (a == b) return 0.0;
  Complex prev = integrate_fixed(f, a, b, 1, cfg.panel_order);
  for (int panels = 2;; panels *= 2) {
    Complex cur = integrate_fixed(f, a, b, panels, cfg.panel_order);
    double err = std::abs(cur - prev);
    if (err <= cfg.abs_tol + cfg.rel_tol * std::abs(cur)) return cur;
    require(panels <= cfg.max_panels, ErrorCode::convergence,
            "quadrature did not converge on finite interval");
    prev = cur;
  }
}

double integrate(const RealFn& f, double a, double b,
                 const QuadratureConfig& cfg) {
  return integrate([&](double x) { return Complex(f(x), 0.0); }, a, b, cfg)
      .real();
}

Complex integrate_to_infinity(const ComplexFn& f, double a, double decay_rate,
                              const QuadratureConfig& cfg) {
  require(decay_rate > 0.0, ErrorCode::divergence,
          "non-positive decay rate for infinite-interval quadrature");
  Accumulator acc;
  double left = a;
  double width = 1.0;
  int panels = 0;
  for (;;) {
    Complex piece = integrate(f, left, left + width, cfg);
    acc.add(piece);
    left += width;
    // |f| beyond `left` is bounded by its current magnitude times the decay;
    // f(left) alone can sit on a zero, so probe the last panel's mass.
    double last_mass = std::abs(piece);
    double tail_bound = last_mass * std::exp(-decay_rate * 0.0) /
                        std::max(1e-300, 1.0 - std::exp(-decay_rate * width));
    tail_bound *= std::exp(-decay_rate * width);
    double scale = std::abs(acc.value());
    if (tail_bound <= cfg.abs_tol + cfg.rel_tol * scale && panels >= 3)
      return acc.value();
    width = std::min(2.0 * width, 16.0 / decay_rate);
    require(++panels <= cfg.max_panels, ErrorCode::convergence,
            "infinite-interval quadrature did not converge");
  }
}

namespace {

Complex oscillatory_weighted(const ComplexFn& f, const Complex& r,
                             double lambda, const QuadratureConfig& cfg,
                             bool use_sin, double start) {
  double growth = std::abs(r.imag());
  require(lambda > growth, ErrorCode::divergence,
          "oscillatory integral: envelope growth exceeds integrand decay");
  double net = lambda - growth;
  double width = std::min(1.0, M_PI / std::max(1.0, std::abs(r.real())));
  auto weighted = [&](double u) -> Complex {
    Complex phase = use_sin ? std::sin(u * r) : std::cos(u * r);
    return f(u) * phase;
  };
  Accumulator acc;
  double left = start;
  double block_mass = 0.0;  // mass of the most recent unit block
  double block_end = start + 1.0;
  int panels = 0;
  for (;;) {
    Complex piece = panel_integral(weighted, left, left + width,
                                   cfg.panel_order);
    // Refine once to control the single-panel error.
    Complex refined = panel_integral(weighted, left, left + 0.5 * width,
                                     cfg.panel_order) +
                      panel_integral(weighted, left + 0.5 * width, left + width,
                                     cfg.panel_order);
    if (std::abs(refined - piece) >
        0.25 * (cfg.abs_tol + cfg.rel_tol * std::abs(refined))) {
      width *= 0.5;
      require(width > 1e-8, ErrorCode::convergence,
              "oscillatory panel width underflow");
      continue;
    }
    acc.add(refined);
    block_mass += std::abs(refined);
    left += width;
    if (left >= block_end) {
      double tail_bound =
          block_mass * std::exp(-net) / std::max(1e-300, 1.0 - std::exp(-net));
      double scale = std::abs(acc.value());
      if (tail_bound <= cfg.abs_tol + cfg.rel_tol * scale &&
          left >= start + 3.0)
        return acc.value();
      block_mass = 0.0;
      block_end += 1.0;
    }
    require(++panels <= cfg.max_panels, ErrorCode::convergence,
            "oscillatory quadrature did not converge");
  }
}

}  // namespace

Complex cosine_integral(const ComplexFn& f, const Complex& r, double lambda,
                        const QuadratureConfig& cfg, double a) {
  return oscillatory_weighted(f, r, lambda, cfg, false, a);
}

Complex sine_integral(const ComplexFn& f, const Complex& r, double lambda,
                      const QuadratureConfig& cfg, double a) {
  return oscillatory_weighted(f, r, lambda, cfg, true, a);
}

Complex oscillatory_tail_integral(const ComplexFn& f, double a,
                                  double half_period, int max_slices,
                                  const QuadratureConfig& cfg,
                                  double* tail_estimate) {
  require(half_period > 0.0, ErrorCode::invalid_argument,
          "half period must be positive");
  // Successive half-period integrals alternate in sign with a slowly varying
  // envelope; iterated averaging of their partial sums converges far faster
  // than the raw series.
  std::vector<Complex> partial;
  Accumulator acc;
  for (int j = 0; j < max_slices; ++j) {
    Complex slice = panel_integral(f, a + j * half_period,
                                   a + (j + 1) * half_period, cfg.panel_order);
    acc.add(slice);
    partial.push_back(acc.value());
  }
  std::vector<Complex> row = partial;
  Complex best = row.back();
  double best_spread = std::abs(row[row.size() - 1] - row[row.size() - 2]);
  while (row.size() >= 2) {
    for (size_t i = 0; i + 1 < row.size(); ++i)
      row[i] = 0.5 * (row[i] + row[i + 1]);
    row.pop_back();
    if (row.size() >= 2) {
      double spread = std::abs(row[row.size() - 1] - row[row.size() - 2]);
      if (spread < best_spread) {
        best_spread = spread;
        best = row.back();
      }
    }
  }
  if (tail_estimate) *tail_estimate = best_spread;
  return best;
}

ChebyshevSeries::ChebyshevSeries(const ComplexFn& f, double a, double b, int n)
    : a_(a), b_(b), coeff_(n) {
  require(n >= 2, ErrorCode::invalid_argument, "Chebyshev order too small");
  std::vector<Complex> fx(n);
  for (int k = 0; k < n; ++k) {
    double t = std::cos(M_PI * (k + 0.5) / n);
    fx[k] = f(0.5 * (a + b) + 0.5 * (b - a) * t);
  }
  for (int j = 0; j < n; ++j) {
    Complex s = 0.0;
    for (int k = 0; k < n; ++k)
      s += fx[k] * std::cos(M_PI * j * (k + 0.5) / n);
    coeff_[j] = s * (2.0 / n);
  }
  coeff_[0] *= 0.5;
}

Complex ChebyshevSeries::operator()(double x) const {
  double t = (2.0 * x - (a_ + b_)) / (b_ - a_);
  t = std::clamp(t, -1.0, 1.0);
  Complex b1 = 0.0, b2 = 0.0;
  for (size_t j = coeff_.size(); j-- > 1;) {
    Complex tmp = b1;
    b1 = 2.0 * t * b1 - b2 + coeff_[j];
    b2 = tmp;
  }
  return t * b1 - b2 + coeff_[0];
}

double ChebyshevSeries::trailing_error() const {
  double e = 0.0;
  size_t n = coeff_.size();
  for (size_t j = n >= 3 ? n - 3 : 0; j < n; ++j) e += std::abs(coeff_[j]);
  return e;
}

PiecewiseChebyshev::PiecewiseChebyshev(const ComplexFn& f,
                                       const std::vector<double>& breaks,
                                       int n_per_segment)
    : breaks_(breaks) {
  require(breaks.size() >= 2, ErrorCode::invalid_argument,
          "need at least one segment");
  for (size_t i = 0; i + 1 < breaks.size(); ++i)
    segments_.emplace_back(f, breaks[i], breaks[i + 1], n_per_segment);
}

Complex PiecewiseChebyshev::operator()(double x) const {
  size_t i = std::upper_bound(breaks_.begin(), breaks_.end(), x) -
             breaks_.begin();
  if (i == 0) i = 1;
  if (i >= breaks_.size()) i = breaks_.size() - 1;
  return segments_[i - 1](x);
}

double PiecewiseChebyshev::trailing_error() const {
  double e = 0.0;
  for (const auto& s : segments_) e = std::max(e, s.trailing_error());
  return e;
}

}  // namespace wck
