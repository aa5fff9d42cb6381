#include "core/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/specfun.hpp"

namespace wck {

namespace {

constexpr double kPi = 3.14159265358979323846;

// u(z, eta w) straight from the integer entries; det = 1 keeps
// Im(eta w) = Im w / |c w + d|^2 exact.
inline double u_of(const UhpPoint& z, const UhpPoint& w,
                   const GroupElement& g) {
  const double cre = double(g.c) * w.x + double(g.d);
  const double cim = double(g.c) * w.y;
  const double den = cre * cre + cim * cim;
  const double are = double(g.a) * w.x + double(g.b);
  const double aim = double(g.a) * w.y;
  const double xx = (are * cre + aim * cim) / den;
  const double yy = w.y / den;
  const double dx = xx - z.x;
  const double dy = yy - z.y;
  return (dx * dx + dy * dy) / (4.0 * z.y * yy);
}

// Q_1 and Q_2 on (1, inf) in closed form; the log form cancels
// catastrophically for large x, so past x = 5 both switch to their
// descending series (coefficients 1/(2j+1) resp. 2m/((2m+1)(2m+3))).
double legendre_q1_real(double x) {
  if (x < 5.0) return 0.5 * x * std::log((x + 1.0) / (x - 1.0)) - 1.0;
  const double r = 1.0 / (x * x);
  double term = r, sum = 0.0;
  for (int j = 1; j < 60 && term > 1e-20; ++j) {
    sum += term / (2.0 * j + 1.0);
    term *= r;
  }
  return sum;
}

double legendre_q2_real(double x) {
  if (x < 5.0)
    return (3.0 * x * x - 1.0) * 0.25 * std::log((x + 1.0) / (x - 1.0)) -
           1.5 * x;
  const double r = 1.0 / (x * x);
  double p = r / x;
  double sum = 0.0;
  for (int m = 1; m < 60 && p > 1e-20; ++m) {
    sum += 2.0 * m / ((2.0 * m + 1.0) * (2.0 * m + 3.0)) * p;
    p *= r;
  }
  return sum;
}

// Largest distance an element of the Frobenius ball can move w away from z:
// cosh dist(i, eta i) = ||eta||^2 / 2, plus the triangle legs to i.
double ball_distance_bound(const UhpPoint& z, const UhpPoint& w,
                           double bound) {
  const UhpPoint origin(0.0, 1.0);
  const double core = 0.5 * bound * bound;
  const double base = core > 1.0 ? std::acosh(core) : 0.0;
  return base + dist(z, origin) + dist(w, origin);
}

template <class Visit, class Term>
KernelValue periodized(const UhpPoint& z, const UhpPoint& w, double sigma,
                       const TruncationBudget& budget, const char* what,
                       Visit&& visit, Term&& term) {
  Accumulator acc;
  ShellTail shells;
  long long n = 0;
  visit([&](const GroupElement& g) {
    const double u = u_of(z, w, g);
    const double x = 1.0 + 2.0 * u;
    const double d = std::acosh(std::max(1.0, x));
    const Complex v = term(u, x, d);
    acc.add(v);
    shells.add(d, std::abs(v));
    ++n;
  });
  KernelValue out;
  out.value = acc.value();
  out.terms_used = n;
  out.tail_estimate = shells.estimate(sigma);
  enforce_tail_policy(budget, out.tail_estimate, what);
  return out;
}

template <class Term>
KernelValue over_ball(const UhpPoint& z, const UhpPoint& w, double sigma,
                      const TruncationBudget& budget, const char* what,
                      Term&& term) {
  require(budget.group_bound >= 1.0, ErrorCode::invalid_argument,
          "group_bound must be >= 1");
  return periodized(
      z, w, sigma, budget, what,
      [&](auto&& f) { for_each_element(budget.group_bound, f); },
      std::forward<Term>(term));
}

template <class Term>
KernelValue over_list(const UhpPoint& z, const UhpPoint& w, double sigma,
                      const std::vector<GroupElement>& elements,
                      const char* what, Term&& term) {
  TruncationBudget report_only;  // caller owns the list; never fail on tails
  return periodized(
      z, w, sigma, report_only, what,
      [&](auto&& f) {
        for (const auto& g : elements) f(g);
      },
      std::forward<Term>(term));
}

}  // namespace

void ShellTail::add(double distance, double magnitude) {
  int idx = int(std::floor(std::max(0.0, distance)));
  idx = std::min(idx, 4095);
  if (size_t(idx) >= bins_.size()) bins_.resize(idx + 1, 0.0);
  bins_[idx] += magnitude;
}

double ShellTail::last_mass() const {
  if (bins_.empty()) return 0.0;
  const size_t d = bins_.size() - 1;
  return d >= 1 ? std::max(bins_[d], bins_[d - 1]) : bins_[d];
}

int ShellTail::last_index() const {
  return bins_.empty() ? -1 : int(bins_.size()) - 1;
}

double ShellTail::estimate(double decay_sigma) const {
  const double s = last_mass();
  if (s <= 0.0) return 0.0;
  if (decay_sigma <= 1.0) return std::numeric_limits<double>::infinity();
  const double q = std::exp(1.0 - decay_sigma);
  return 3.0 * s * q / (1.0 - q);
}

void enforce_tail_policy(const TruncationBudget& budget, double tail,
                         const char* what) {
  if (budget.tail_policy == TailPolicy::fail_if_above &&
      !(tail <= budget.tail_tolerance)) {
    fail(ErrorCode::convergence,
         std::string(what) + ": truncation tail above the requested bound");
  }
}

KernelValue automorphic_K(const UhpPoint& z, const UhpPoint& w,
                          const Complex& s, const TruncationBudget& budget) {
  require(s.real() > 1.0, ErrorCode::domain,
          "automorphic_K: series requires Re s > 1");
  return over_ball(z, w, s.real(), budget, "automorphic_K",
                   [&s](double, double x, double) { return pow_minus(x, s); });
}

KernelValue automorphic_K(const UhpPoint& z, const UhpPoint& w,
                          const Complex& s,
                          const std::vector<GroupElement>& elements) {
  require(s.real() > 1.0, ErrorCode::domain,
          "automorphic_K: series requires Re s > 1");
  return over_list(z, w, s.real(), elements, "automorphic_K",
                   [&s](double, double x, double) { return pow_minus(x, s); });
}

double heat_kernel_plane_radial(double distance, double t,
                                const QuadratureConfig& cfg) {
  require(t > 0.0, ErrorCode::domain, "heat kernel requires t > 0");
  require(distance >= 0.0, ErrorCode::invalid_argument,
          "heat kernel: negative distance");
  const double x = std::cosh(distance);
  const double big_r = std::sqrt(46.0 / t);
  auto f = [&](double r) {
    return r * std::tanh(kPi * r) * std::exp(-(r * r + 0.25) * t) *
           legendre_p_conical(Complex(r, 0.0), x);
  };
  return integrate(RealFn(f), 0.0, big_r, cfg) / (2.0 * kPi);
}

double heat_kernel_plane(const UhpPoint& z, const UhpPoint& w, double t,
                         const QuadratureConfig& cfg) {
  return heat_kernel_plane_radial(dist(z, w), t, cfg);
}

namespace {

// Gaussian-shell tail: ratio between consecutive unit shells is
// e * exp(-(2i+1)/4t); shells may grow before the Gaussian wins, so the
// product is accumulated until it dies.
double heat_shell_tail(double last_mass, int last_index, double t) {
  if (last_mass <= 0.0) return 0.0;
  long double tail = 0.0L, prod = 1.0L;
  for (int i = last_index + 1; i < last_index + 800; ++i) {
    prod *= std::exp(1.0 - (2.0 * i + 1.0) / (4.0 * t));
    if (prod > 1e8) return std::numeric_limits<double>::infinity();
    tail += prod;
    if (prod < 1e-18) break;
  }
  return 3.0 * last_mass * double(tail);
}

// Past this distance the r-integral would need more relative accuracy than
// doubles hold (see header); true values there are < e^{-30} of the sum.
double heat_useful_distance(double t) {
  return t + std::sqrt(t * t + 120.0 * t);
}

}  // namespace

KernelValue heat_kernel_M(const UhpPoint& z, const UhpPoint& w, double t,
                          const TruncationBudget& budget,
                          const QuadratureConfig& cfg) {
  require(t > 0.0, ErrorCode::domain, "heat kernel requires t > 0");
  require(budget.group_bound >= 1.0, ErrorCode::invalid_argument,
          "group_bound must be >= 1");
  const double d_ball = ball_distance_bound(z, w, budget.group_bound);
  const double d_use = heat_useful_distance(t);
  const double d_model = std::min(d_ball + 0.05, d_use);

  const double expected = 0.477 * budget.group_bound * budget.group_bound;
  PiecewiseChebyshev model;
  const bool use_model = expected > 256.0;
  if (use_model) {
    std::vector<double> breaks;
    for (double b = 0.0; b < d_model; b += 1.5) breaks.push_back(b);
    breaks.push_back(d_model);
    model = PiecewiseChebyshev(
        [&](double d) {
          const double v = heat_kernel_plane_radial(d, t, cfg);
          return Complex(std::log(std::max(v, 1e-300)), 0.0);
        },
        breaks, 20);
  }

  Accumulator acc;
  ShellTail shells;
  long long n = 0;
  double omitted = 0.0;
  double edge_log = 0.0;
  bool have_edge = false;
  for_each_element(budget.group_bound, [&](const GroupElement& g) {
    const double u = u_of(z, w, g);
    const double d = std::acosh(1.0 + 2.0 * std::max(0.0, u));
    ++n;
    if (d > d_model) {
      if (!have_edge) {
        edge_log = use_model
                       ? model(d_model).real()
                       : std::log(std::max(
                             heat_kernel_plane_radial(d_model, t, cfg),
                             1e-300));
        have_edge = true;
      }
      omitted += std::exp(edge_log - (d - d_model) * d_model / (2.0 * t));
      return;
    }
    const double v = use_model ? std::exp(model(d).real())
                               : heat_kernel_plane_radial(d, t, cfg);
    acc.add(v);
    shells.add(d, std::abs(v));
  });

  KernelValue out;
  out.value = acc.value();
  out.terms_used = n;
  out.tail_estimate =
      heat_shell_tail(shells.last_mass(), shells.last_index(), t) + omitted;
  enforce_tail_policy(budget, out.tail_estimate, "heat_kernel_M");
  return out;
}

Complex poisson_scalar_closed(const Complex& a, const Complex& u) {
  require(a.real() > 0.0, ErrorCode::domain,
          "poisson_scalar: requires Re a > 0");
  return std::exp(-u * std::sqrt(a));
}

Complex poisson_scalar_integral(const Complex& a, const Complex& u,
                                const QuadratureConfig& cfg) {
  require(a.real() > 0.0, ErrorCode::domain,
          "poisson_scalar: requires Re a > 0");
  const double u2r = (u * u).real();
  require(u2r > 0.0, ErrorCode::domain, "poisson_scalar: requires Re u^2 > 0");
  const double tau_lo = std::log(u2r / 200.0) - 1.0;
  const double tau_hi = std::log(50.0 / a.real()) + 1.0;
  auto f = [&](double tau) {
    const double t = std::exp(tau);
    return std::exp(-a * t - u * u / (4.0 * t) - 0.5 * tau);
  };
  return integrate(ComplexFn(f), tau_lo, tau_hi, cfg) * u /
         std::sqrt(4.0 * kPi);
}

namespace {

// One periodization term of the Poisson kernel: the G-transform of the
// plane heat kernel at a fixed distance, t-integrated in tau = log t
// through a Chebyshev model of log K_H(d, e^tau).
Complex poisson_plane_radial(double d, const Complex& u, const Complex& Z,
                             const QuadratureConfig& cfg) {
  const double u2r = (u * u).real();
  const double zr = Z.real() + 0.25;
  double tau_hi = std::log(50.0 / std::max(zr, 1.5e-3)) + 1.0;
  double tau_lo = std::log((d * d + u2r) / 200.0) - 1.0;
  if (tau_lo > tau_hi - 1.0) tau_lo = tau_hi - 1.0;

  std::vector<double> breaks;
  for (double b = tau_lo; b < tau_hi; b += 3.0) breaks.push_back(b);
  breaks.push_back(tau_hi);
  PiecewiseChebyshev logk(
      [&](double tau) {
        const double v = heat_kernel_plane_radial(d, std::exp(tau), cfg);
        return Complex(std::log(std::max(v, 1e-300)), 0.0);
      },
      breaks, 32);

  auto f = [&](double tau) {
    const double t = std::exp(tau);
    const Complex expo =
        Complex(logk(tau).real() - 0.5 * tau, 0.0) - Z * t - u * u / (4.0 * t);
    return std::exp(expo);
  };
  return integrate(ComplexFn(f), tau_lo, tau_hi, cfg) * u /
         std::sqrt(4.0 * kPi);
}

}  // namespace

Complex poisson_kernel(const UhpPoint& z, const UhpPoint& w, const Complex& u,
                       const Complex& Z, KernelDomain on,
                       const TruncationBudget& budget,
                       const QuadratureConfig& cfg, double* tail_deficit) {
  require(u.real() > 0.0 && (u * u).real() > 0.0, ErrorCode::domain,
          "poisson_kernel: requires Re u > 0 and Re u^2 > 0");
  if (on == KernelDomain::plane) {
    require(Z.real() >= -0.25 - 1e-12, ErrorCode::domain,
            "poisson_kernel: plane translate requires Re Z >= -1/4");
    if (tail_deficit) *tail_deficit = 0.0;
    return poisson_plane_radial(dist(z, w), u, Z, cfg);
  }
  require(Z.real() >= 0.0, ErrorCode::domain,
          "poisson_kernel: surface translate requires Re Z >= 0");
  const auto elements = enumerate_elements(budget.group_bound);
  Accumulator acc;
  for (const auto& g : elements) {
    const double uu = u_of(z, w, g);
    const double d = std::acosh(1.0 + 2.0 * std::max(0.0, uu));
    acc.add(poisson_plane_radial(d, u, Z, cfg));
  }
  // The constant mode lives at t beyond any finite element ball: report the
  // unreachable t-tail mass (1/vol(M) = 3/pi times the scalar transform tail).
  const double d_ball = ball_distance_bound(z, w, budget.group_bound);
  const double t_reach = std::max(1.0, 0.5 * d_ball);
  auto tail_f = [&](double tau) {
    const double t = std::exp(tau);
    return Complex(
        std::exp(-Z.real() * t - 0.25 * (u * u).real() / t - 0.5 * tau), 0.0);
  };
  const double mode_rate = std::max(0.5, Z.real());
  const double deficit =
      (3.0 / kPi) * std::abs(u) / std::sqrt(4.0 * kPi) *
      std::abs(integrate_to_infinity(ComplexFn(tail_f), std::log(t_reach),
                                     mode_rate, cfg));
  if (tail_deficit) *tail_deficit = deficit;
  enforce_tail_policy(budget, deficit, "poisson_kernel");
  return acc.value();
}

namespace {

inline Complex greens_term(const Complex& s, bool fast1, bool fast2,
                           double u, double x) {
  require(u > 1e-12, ErrorCode::singularity,
          "greens_function: z lies on the orbit of w");
  if (fast1) return Complex(legendre_q1_real(x), 0.0);
  if (fast2) return Complex(legendre_q2_real(x), 0.0);
  return legendre_q(s - 1.0, x);
}

}  // namespace

KernelValue greens_function(const UhpPoint& z, const UhpPoint& w,
                            const Complex& s, const TruncationBudget& budget) {
  require(s.real() > 1.0, ErrorCode::domain,
          "greens_function: requires Re s > 1");
  const bool fast1 = s.imag() == 0.0 && s.real() == 2.0;
  const bool fast2 = s.imag() == 0.0 && s.real() == 3.0;
  KernelValue out = over_ball(z, w, s.real(), budget, "greens_function",
                              [&](double u, double x, double) {
                                return greens_term(s, fast1, fast2, u, x);
                              });
  out.value /= 2.0 * kPi;
  out.tail_estimate /= 2.0 * kPi;
  enforce_tail_policy(budget, out.tail_estimate, "greens_function");
  return out;
}

KernelValue greens_function(const UhpPoint& z, const UhpPoint& w,
                            const Complex& s,
                            const std::vector<GroupElement>& elements) {
  require(s.real() > 1.0, ErrorCode::domain,
          "greens_function: requires Re s > 1");
  const bool fast1 = s.imag() == 0.0 && s.real() == 2.0;
  const bool fast2 = s.imag() == 0.0 && s.real() == 3.0;
  KernelValue out = over_list(z, w, s.real(), elements, "greens_function",
                              [&](double u, double x, double) {
                                return greens_term(s, fast1, fast2, u, x);
                              });
  out.value /= 2.0 * kPi;
  out.tail_estimate /= 2.0 * kPi;
  return out;
}

namespace {

inline Complex hyper_term(const Complex& nu, double u, double x) {
  require(u > 1e-8, ErrorCode::singularity,
          "hypergeom_kernel: z lies on the orbit of w");
  const double y = 1.0 / (x + std::sqrt((x - 1.0) * (x + 1.0)));
  return hypergeom_point_term(nu, y);
}

}  // namespace

KernelValue hypergeom_kernel(const UhpPoint& z, const UhpPoint& w,
                             const Complex& nu,
                             const TruncationBudget& budget) {
  require(nu.real() > 1.0, ErrorCode::domain,
          "hypergeom_kernel: requires Re nu > 1");
  return over_ball(z, w, nu.real(), budget, "hypergeom_kernel",
                   [&nu](double u, double x, double) {
                     return hyper_term(nu, u, x);
                   });
}

KernelValue hypergeom_kernel(const UhpPoint& z, const UhpPoint& w,
                             const Complex& nu,
                             const std::vector<GroupElement>& elements) {
  require(nu.real() > 1.0, ErrorCode::domain,
          "hypergeom_kernel: requires Re nu > 1");
  return over_list(z, w, nu.real(), elements, "hypergeom_kernel",
                   [&nu](double u, double x, double) {
                     return hyper_term(nu, u, x);
                   });
}

KernelValue hypergeom_kernel_series(const UhpPoint& z, const UhpPoint& w,
                                    const Complex& nu,
                                    const TruncationBudget& budget) {
  require(nu.real() > 1.0, ErrorCode::domain,
          "hypergeom_kernel: requires Re nu > 1");
  require(budget.group_bound >= 1.0, ErrorCode::invalid_argument,
          "group_bound must be >= 1");
  // One pass to freeze the ball, then the k-series ascends in place:
  // base_eta <- cosh^{-nu}, multiplied by cosh^{-2} per step.
  std::vector<Complex> base;
  std::vector<double> mul;
  ShellTail shells;
  for_each_element(budget.group_bound, [&](const GroupElement& g) {
    const double u = u_of(z, w, g);
    require(u > 1e-8, ErrorCode::singularity,
            "hypergeom_kernel: z lies on the orbit of w");
    const double x = 1.0 + 2.0 * u;
    base.push_back(pow_minus(x, nu));
    mul.push_back(1.0 / (x * x));
    shells.add(std::acosh(x), std::abs(base.back()));
  });

  Accumulator acc;
  Complex coeff = 1.0;  // b_k(nu) / k!
  double prev_mag = 0.0;
  double last_mag = 0.0;
  int calm = 0;
  int k = 0;
  double scale = 0.0;
  for (; k <= budget.series_kmax; ++k) {
    Accumulator level;
    for (size_t i = 0; i < base.size(); ++i) {
      level.add(coeff * base[i]);
      base[i] *= mul[i];
    }
    const Complex term = level.value();
    acc.add(term);
    scale = std::max(scale, std::abs(acc.value()));
    prev_mag = last_mag;
    last_mag = std::abs(term);
    if (k > 0 && last_mag < 1e-15 * (scale + 1e-300) && last_mag < prev_mag)
      ++calm;
    else
      calm = 0;
    const Complex kk(double(k), 0.0);
    coeff *= (nu * 0.5 + kk) * (nu * 0.5 + 0.5 + kk) /
             ((nu + 0.5 + kk) * (kk + 1.0));
    if (calm >= 3) {
      ++k;
      break;
    }
  }

  KernelValue out;
  out.value = acc.value();
  out.terms_used = (long long)base.size();
  const double ratio =
      prev_mag > 0.0 ? std::min(0.95, last_mag / prev_mag) : 0.5;
  const double series_tail = last_mag * ratio / (1.0 - ratio);
  out.tail_estimate = shells.estimate(nu.real()) + series_tail;
  enforce_tail_policy(budget, out.tail_estimate, "hypergeom_kernel_series");
  return out;
}

KernelValue wave_action(const UhpPoint& z, const UhpPoint& w,
                        const selberg::TestFunction& g,
                        const TruncationBudget& budget,
                        const QuadratureConfig& cfg, WaveMode mode) {
  require(g.decay_rate > 0.5, ErrorCode::domain,
          "wave_action: test function decays too slowly (need rate > 1/2)");
  if (mode == WaveMode::auto_select)
    mode = g.k_closed ? WaveMode::shortcut : WaveMode::pipeline;
  if (mode == WaveMode::shortcut) {
    require(bool(g.k_closed), ErrorCode::invalid_argument,
            "wave_action: no closed-form kernel attached");
    return over_ball(z, w, g.k_decay_power, budget, "wave_action",
                     [&](double u, double, double) { return g.k_closed(u); });
  }

  require(g.h_decay_rate > 0.0, ErrorCode::domain,
          "wave_action: transform decay rate unknown");
  const selberg::TestFunction gc = g;
  const QuadratureConfig qc = cfg;
  auto h_fn = [gc, qc](double r) {
    return selberg::h_transform(gc, Complex(r, 0.0), qc);
  };
  const double tol = std::max(cfg.abs_tol, 1e-12);
  selberg::CachedInverse ci =
      selberg::cached_inverse(h_fn, g.h_decay_rate, g.decay_rate, tol, cfg);

  const double sigma = g.decay_rate + 0.5;  // k(u) ~ u^{-(a + 1/2)}
  const double expected = 0.477 * budget.group_bound * budget.group_bound;
  if (expected <= 300.0) {
    return over_ball(z, w, sigma, budget, "wave_action",
                     [&](double u, double, double) { return ci.k(u); });
  }
  // Chebyshev model in log cosh(distance); the kernel decays exponentially
  // there, so stepped segments keep per-segment relative accuracy.
  const double x_max = ball_distance_bound(z, w, budget.group_bound) + 0.2;
  std::vector<double> breaks;
  for (double b = 0.0; b < x_max; b += 2.0) breaks.push_back(b);
  breaks.push_back(x_max);
  PiecewiseChebyshev kmodel(
      [&](double x) { return ci.k(0.5 * std::expm1(x)); }, breaks, 32);
  return over_ball(z, w, sigma, budget, "wave_action",
                   [&](double u, double, double) {
                     return kmodel(std::log1p(2.0 * u));
                   });
}

GreensContourResult greens_contour(const UhpPoint& z, const UhpPoint& w,
                                   const Complex& s, double delta, double T,
                                   const TruncationBudget& budget,
                                   const QuadratureConfig& cfg) {
  require(s.real() > 1.0, ErrorCode::domain,
          "greens_contour: requires Re s > 1");
  require(delta > 0.0 && delta < 0.5, ErrorCode::invalid_argument,
          "greens_contour: delta must lie in (0, 1/2)");
  require(1.0 + delta < s.real(), ErrorCode::invalid_argument,
          "greens_contour: contour must pass left of s");
  require(T > 0.0, ErrorCode::invalid_argument, "greens_contour: T > 0");
  require(budget.group_bound >= 1.0, ErrorCode::invalid_argument,
          "group_bound must be >= 1");

  std::vector<double> ys;
  ShellTail shells;
  double xi_max = 0.0;
  for_each_element(budget.group_bound, [&](const GroupElement& g) {
    const double u = u_of(z, w, g);
    require(u > 1e-8, ErrorCode::singularity,
            "greens_contour: z lies on the orbit of w");
    const double x = 1.0 + 2.0 * u;
    const double xi = std::acosh(x);
    ys.push_back(1.0 / (x + std::sqrt((x - 1.0) * (x + 1.0))));
    xi_max = std::max(xi_max, xi);
    shells.add(xi, std::abs(legendre_q(s - 1.0, x)) / (2.0 * kPi));
  });

  const Complex s_half = s - 0.5;
  auto integrand = [&](double t) {
    const Complex nu(1.0 + delta, t);
    Accumulator sum;
    for (double y : ys) sum.add(hypergeom_point_term(nu, y));
    const Complex weight =
        c_coeff(nu) / (s_half * s_half - (0.5 - nu) * (0.5 - nu));
    return weight * sum.value() * Complex(0.0, 1.0);  // d nu = i dt
  };

  // Panel width tied to the fastest oscillation e^{-i t xi_max}; both
  // half-lines are integrated outward so partial symmetric truncations
  // fall out of the running sum.
  const double h0 = std::min(1.0, 12.0 / std::max(1.0, xi_max));
  const int quarters = std::max(1, int(std::ceil(T / (4.0 * h0))));
  const int m = 4 * quarters;
  const double h = T / m;
  const auto& gl = gauss_legendre(cfg.panel_order);

  GreensContourResult out;
  Accumulator acc;
  for (int j = 0; j < m; ++j) {
    const double a = j * h;
    const double mid = a + 0.5 * h;
    Accumulator panel;
    for (size_t q = 0; q < gl.nodes.size(); ++q) {
      const double dt = 0.5 * h * gl.nodes[q];
      const double wq = 0.5 * h * gl.weights[q];
      panel.add(integrand(mid + dt) * wq);
      panel.add(integrand(-mid - dt) * wq);
    }
    acc.add(panel.value());
    if (j + 1 == m / 4) out.partials.push_back({T / 4.0, acc.value()});
    if (j + 1 == m / 2) out.partials.push_back({T / 2.0, acc.value()});
  }
  out.partials.push_back({T, acc.value()});
  out.value = acc.value();
  out.terms_used = (long long)ys.size();

  const double d1 = std::abs(out.partials[1].value - out.partials[0].value);
  const double d2 = std::abs(out.partials[2].value - out.partials[1].value);
  const double ratio = d1 > 0.0 ? d2 / d1 : 1.0;
  out.contour_tail = (ratio < 0.95) ? d2 * ratio / (1.0 - ratio) : 3.0 * d2;
  out.group_tail = shells.estimate(s.real());
  enforce_tail_policy(budget, out.contour_tail + out.group_tail,
                      "greens_contour");
  return out;
}

}  // namespace wck
