#include "core/selberg.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "core/specfun.hpp"

namespace wck::selberg {

namespace {

// log cosh(u) without overflow for large u.
double log_cosh(double u) {
  double a = std::abs(u);
  return a + std::log1p(std::exp(-2.0 * a)) - M_LN2;
}

// tanh(u)^p for u >= 0 and complex p with Re p > 0 at u = 0.
Complex tanh_pow(double u, const Complex& p) {
  if (u == 0.0) {
    require(p.real() > 0.0, ErrorCode::domain,
            "tanh^p undefined at u = 0 for Re p <= 0");
    return 0.0;
  }
  return std::exp(p * std::log(std::tanh(u)));
}

// F(a, b; c; x) for x in [0, 1): direct series while the argument is
// moderate, connection formula in 1-x when the series would crawl.
Complex hyp_wide(const Complex& a, const Complex& b, const Complex& c,
                 double x) {
  if (x <= 0.75) return gauss_2f1(a, b, c, x);
  return gauss_2f1_near_one(a, b, c, x);
}

Complex g_value(const Complex& s, double u) {
  return std::sqrt(2.0 * M_PI) *
         std::exp(log_gamma(s - 0.5) - log_gamma(s) +
                  (0.5 - s) * log_cosh(u));
}

Complex g_beta_value(const Complex& s, const Complex& beta, double u) {
  if (u == 0.0) {
    require(beta.real() > 0.0, ErrorCode::domain,
            "g_{s,beta}(0) requires Re beta > 0");
    return 0.0;
  }
  return g_value(s, u) * tanh_pow(u, beta);
}

double sech_sq(double u) {
  double c = std::cosh(u);
  return 1.0 / (c * c);
}

// The wave-trace arguments need Re beta large, but pointwise on u > 0 the
// formulas continue down to Re beta >= 0, and beta = 0 is exactly where the
// closed forms are compared against the plain elliptic test function.
void require_test_params(const Complex& s, const Complex& beta,
                         const char* what) {
  require(s.real() > 1.0, ErrorCode::domain, what);
  require(beta.real() >= 0.0, ErrorCode::domain, what);
}

}  // namespace

TestFunction test_g(const Complex& s) {
  require(s.real() > 1.0, ErrorCode::domain, "test_g: requires Re s > 1");
  TestFunction t;
  t.eval = [s](double u) { return g_value(s, u); };
  t.decay_rate = s.real() - 0.5;
  t.h_decay_rate = 1.45;
  t.label = "g_s";
  t.k_closed = [s](double u) { return std::exp(-s * std::log1p(2.0 * u)); };
  t.k_decay_power = s.real();
  return t;
}

TestFunction test_g_beta(const Complex& s, const Complex& beta) {
  require(s.real() > 1.0 && beta.real() > 0.0, ErrorCode::domain,
          "test_g_beta: requires Re s > 1, Re beta > 0");
  TestFunction t;
  t.eval = [s, beta](double u) { return g_beta_value(s, beta, u); };
  t.decay_rate = s.real() - 0.5;
  t.h_decay_rate = 1.45;
  t.label = "g_{s,beta}";
  return t;
}

TestFunction test_G(const Complex& s, const Complex& beta) {
  require_test_params(s, beta, "test_G: requires Re s > 1, Re beta >= 0");
  TestFunction t;
  t.eval = [s, beta](double u) -> Complex {
    if (u == 0.0) {
      // tanh^{beta+1-s}: vanishes when the exponent has positive real part,
      // blows up otherwise (matching the elliptic test function at beta = 0).
      require((beta + 1.0 - s).real() > 0.0, ErrorCode::singularity,
              "test_G: singular at u = 0 for Re beta <= Re(s-1)");
      return 0.0;
    }
    return g_value(s, u) * tanh_pow(u, beta + 1.0 - s) *
           hyp_wide(0.25, 0.75, 0.5 * s + 0.5, sech_sq(u));
  };
  t.decay_rate = s.real() - 0.5;
  t.h_decay_rate = 1.45;
  t.label = "G_{s,beta}";
  return t;
}

TestFunction test_G_tilde(const Complex& nu, const Complex& beta) {
  require_test_params(nu, beta,
                      "test_G_tilde: requires Re nu > 1, Re beta >= 0");
  TestFunction t;
  // g_nu(u) cosh^nu(u) collapses to a Gamma factor times sqrt(cosh u), so the
  // stable summand form absorbs the whole hypergeometric factor:
  //   G~ = sqrt(2 pi) Gamma(nu-1/2)/Gamma(nu) sqrt(cosh u) tanh^beta(u)
  //        (2 e^{-u})^nu F(nu, 1/2; nu+1/2; e^{-2u}).
  Complex pref = std::sqrt(2.0 * M_PI) *
                 std::exp(log_gamma(nu - 0.5) - log_gamma(nu));
  t.eval = [nu, beta, pref](double u) -> Complex {
    if (u == 0.0) {
      require(beta.real() > 0.0, ErrorCode::singularity,
              "test_G_tilde: singular at u = 0 for Re beta <= 0");
      return 0.0;
    }
    return pref * std::sqrt(std::cosh(u)) * tanh_pow(u, beta) *
           hypergeom_point_term(nu, std::exp(-u));
  };
  t.decay_rate = nu.real() - 0.5;
  t.h_decay_rate = 1.45;
  t.label = "G~_{nu,beta}";
  return t;
}

TestFunction test_g_elliptic(const Complex& s) {
  require(s.real() > 1.0, ErrorCode::domain,
          "test_g_elliptic: requires Re s > 1");
  TestFunction t;
  t.eval = [s](double u) -> Complex {
    require(u > 0.0, ErrorCode::singularity,
            "elliptic test function blows up at u = 0");
    return g_value(s, u) * tanh_pow(u, 1.0 - s) *
           hyp_wide(0.25, 0.75, 0.5 * s + 0.5, sech_sq(u));
  };
  t.decay_rate = s.real() - 0.5;
  t.h_decay_rate = 1.45;
  t.singular_power = s.real() - 1.0;
  t.label = "g_ell";
  return t;
}

TestFunction custom_test(ComplexFn eval, double decay_rate,
                         double h_decay_rate, std::string label) {
  TestFunction t;
  t.eval = std::move(eval);
  t.decay_rate = decay_rate;
  t.h_decay_rate = h_decay_rate;
  t.label = std::move(label);
  return t;
}

Complex g_closed_form(const Complex& s, double u) { return g_value(s, u); }

Complex big_q_closed_form(const Complex& s, double v) {
  return std::sqrt(0.5 * M_PI) * std::exp(log_gamma(s - 0.5) - log_gamma(s)) *
         std::pow(Complex(1.0 + 2.0 * v), 0.5 - s);
}

Complex h_closed_form(const Complex& s, const Complex& r) {
  return a_coeff(Complex(0.5, 0.0) + Complex(0.0, 1.0) * r, s);
}

Complex g_elliptic_direct(const Complex& s, double u) {
  require(u > 0.0, ErrorCode::domain, "g_elliptic_direct: u must be positive");
  double sh = std::sinh(0.5 * u);
  require(sh > 1.0, ErrorCode::domain,
          "g_elliptic_direct: requires sinh(u/2) > 1 for series convergence");
  double z = -1.0 / (sh * sh);
  Complex pref = std::pow(Complex(2.0), 1.0 - s) * std::sqrt(M_PI) *
                 std::exp(log_gamma(s - 0.5) - log_gamma(s));
  return pref * std::exp((1.0 - s) * std::log(std::cosh(0.5 * u))) *
         std::pow(Complex(sh * sh), -0.5 * s) *
         gauss_2f1(Complex(0.5, 0.0), 0.5 * s, s, z);
}

Complex g_series_partial(const Complex& s, const Complex& beta, double u,
                         int terms) {
  require(terms >= 1, ErrorCode::invalid_argument, "need at least one term");
  Accumulator sum;
  Complex coeff = 1.0;
  for (int k = 0; k < terms; ++k) {
    sum.add(coeff * g_beta_value(s + 2.0 * k, beta, u));
    coeff *= (0.5 * s + double(k)) / double(k + 1);
  }
  return sum.value();
}

Complex g_tilde_series_partial(const Complex& nu, const Complex& beta,
                               double u, int terms) {
  require(terms >= 1, ErrorCode::invalid_argument, "need at least one term");
  Accumulator sum;
  Complex coeff = 1.0;  // b_k(nu)/k! (nu)_{2k} / (nu-1/2)_{2k}
  for (int k = 0; k < terms; ++k) {
    sum.add(coeff * g_beta_value(nu + 2.0 * k, beta, u));
    coeff *= (0.5 * nu + double(k)) * (0.5 * nu + 0.5 + double(k)) /
             ((nu + 0.5 + double(k)) * double(k + 1));
    coeff *= (nu + 2.0 * k) * (nu + 2.0 * k + 1.0) /
             ((nu + 2.0 * k - 0.5) * (nu + 2.0 * k + 0.5));
  }
  return sum.value();
}

Complex shift_ratio(const Complex& s, const Complex& r, int n) {
  require(n >= 0, ErrorCode::invalid_argument, "shift_ratio: negative shift");
  Complex ir_half = Complex(0.0, 0.5) * r;
  return std::pow(Complex(2.0), -2.0 * n) * pochhammer(s, 2 * n) /
         (pochhammer(0.5 * s - 0.25 - ir_half, n) *
          pochhammer(0.5 * s - 0.25 + ir_half, n));
}

RadialKernel cosh_power_kernel(const Complex& s) {
  RadialKernel k;
  k.eval = [s](double u) {
    return std::pow(Complex(1.0 + 2.0 * u), -s);
  };
  k.decay_power = s.real();
  k.singular_power = 0.0;
  k.label = "cosh_power";
  return k;
}

RadialKernel sinh_power_kernel(const Complex& s) {
  RadialKernel k;
  k.eval = [s](double u) -> Complex {
    require(u > 0.0, ErrorCode::singularity,
            "sinh-power kernel blows up on the diagonal");
    return std::exp(-0.5 * s * std::log(4.0 * u * (u + 1.0)));
  };
  k.decay_power = s.real();
  k.singular_power = 0.5 * s.real();
  k.label = "sinh_power";
  return k;
}

RadialKernel custom_kernel(ComplexFn eval, double decay_power,
                           double singular_power, std::string label) {
  RadialKernel k;
  k.eval = std::move(eval);
  k.decay_power = decay_power;
  k.singular_power = singular_power;
  k.label = std::move(label);
  return k;
}

ForwardStages forward_stages(const RadialKernel& k,
                             const QuadratureConfig& cfg) {
  require(k.decay_power > 0.5, ErrorCode::divergence,
          "forward transform: kernel decays too slowly for the first stage");
  double rate = 2.0 * k.decay_power - 1.0;
  double sing = k.singular_power;
  ComplexFn kernel = k.eval;
  auto big_q = [kernel, rate, sing, cfg](double v) -> Complex {
    require(v >= 0.0, ErrorCode::domain, "negative first-stage argument");
    require(v > 0.0 || sing < 0.5, ErrorCode::divergence,
            "first-stage integral diverges at v = 0 for this kernel");
    // Q(v) = 2 int k(v + t^2) dt with t = sinh(tau) so that the tail
    // decays exponentially in tau.
    auto integrand = [&](double tau) {
      double sh = std::sinh(tau);
      return 2.0 * kernel(v + sh * sh) * std::cosh(tau);
    };
    return integrate_to_infinity(integrand, 0.0, rate, cfg);
  };
  ForwardStages st;
  st.big_q = big_q;
  st.g = [big_q](double u) {
    double sh = std::sinh(0.5 * u);
    return 2.0 * big_q(sh * sh);
  };
  return st;
}

Complex forward_h(const RadialKernel& k, const Complex& r,
                  const QuadratureConfig& cfg) {
  require(k.singular_power < 1.0, ErrorCode::divergence,
          "forward transform diverges: kernel singularity is not integrable "
          "after the first two stages");
  double lambda = k.decay_power - 0.5;
  require(lambda > std::abs(r.imag()), ErrorCode::divergence,
          "forward transform diverges: oscillation growth exceeds decay");
  ForwardStages st = forward_stages(k, cfg);
  if (k.singular_power == 0.0)
    return 2.0 * cosine_integral(st.g, r, lambda, cfg);
  // Head on (0, 1] with u = e^{-x}: the algebraic blow-up of g at u = 0
  // becomes a smooth exponential decay in x.
  double head_rate = 1.0 - std::max(0.0, 2.0 * k.singular_power - 1.0);
  auto head_integrand = [&](double x) -> Complex {
    double u = std::exp(-x);
    return st.g(u) * std::cos(r * u) * u;
  };
  Complex head = integrate_to_infinity(head_integrand, 0.0, head_rate, cfg);
  Complex tail = cosine_integral(st.g, r, lambda, cfg, 1.0);
  return 2.0 * (head + tail);
}

Complex h_transform(const TestFunction& g, const Complex& r,
                    const QuadratureConfig& cfg) {
  require(g.decay_rate > std::abs(r.imag()), ErrorCode::divergence,
          "h transform: test function decays too slowly for this r");
  require(g.singular_power < 1.0, ErrorCode::divergence,
          "h transform diverges at the origin");
  if (g.singular_power > 0.0) {
    auto head_integrand = [&](double x) -> Complex {
      double u = std::exp(-x);
      return g.eval(u) * std::cos(r * u) * u;
    };
    Complex head = integrate_to_infinity(head_integrand, 0.0,
                                         1.0 - g.singular_power, cfg);
    Complex tail = cosine_integral(g.eval, r, g.decay_rate, cfg, 1.0);
    return 2.0 * (head + tail);
  }
  return 2.0 * cosine_integral(g.eval, r, g.decay_rate, cfg);
}

InverseStages inverse_stages(std::function<Complex(double)> h,
                             double h_decay_rate, double g_decay_rate,
                             const QuadratureConfig& cfg) {
  require(h_decay_rate > 0.0 && g_decay_rate > 0.0, ErrorCode::invalid_argument,
          "inverse transform needs positive decay rates");
  InverseStages st;
  auto g = [h, h_decay_rate, cfg](double u) {
    return cosine_integral(h, Complex(u, 0.0), h_decay_rate, cfg) / M_PI;
  };
  auto g_prime = [h, h_decay_rate, cfg](double w) {
    auto rh = [&](double r) { return h(r) * r; };
    return -sine_integral(rh, Complex(w, 0.0), h_decay_rate, cfg) / M_PI;
  };
  st.g = g;
  st.g_prime = g_prime;
  st.big_q = [g](double v) {
    return 0.5 * g(2.0 * std::asinh(std::sqrt(v)));
  };
  st.k = [g_prime, g_decay_rate, cfg](double u) -> Complex {
    require(u > 0.0, ErrorCode::domain,
            "inverse transform kernel requires u > 0");
    auto integrand = [&](double tau) -> Complex {
      double sh = std::sinh(tau);
      double v = u + sh * sh;
      double w = 2.0 * std::asinh(std::sqrt(v));
      return g_prime(w) * std::cosh(tau) / std::sqrt(v * (v + 1.0));
    };
    return -integrate_to_infinity(integrand, 0.0, 2.0 * g_decay_rate + 1.0,
                                  cfg) /
           M_PI;
  };
  return st;
}

namespace {

// Sum of fixed GL panels of f(x) * osc(x w) over [0, b], panel width at most
// half an oscillation period. Used on Chebyshev models, where the integrand
// itself carries no further fine structure.
Complex finite_oscillatory(const std::function<Complex(double)>& f, double b,
                           double w, bool use_sin) {
  double width = std::min(0.5, M_PI / (2.0 * std::max(1.0, std::abs(w))));
  int panels = int(std::ceil(b / width));
  Accumulator acc;
  for (int i = 0; i < panels; ++i) {
    double lo = b * i / panels, hi = b * (i + 1) / panels;
    auto weighted = [&](double x) {
      return f(x) * (use_sin ? std::sin(w * x) : std::cos(w * x));
    };
    acc.add(panel_integral(weighted, lo, hi, 24));
  }
  return acc.value();
}

std::vector<double> segment_breaks(double radius, double step) {
  std::vector<double> breaks;
  int n = std::max(1, int(std::ceil(radius / step)));
  for (int i = 0; i <= n; ++i) breaks.push_back(radius * i / n);
  return breaks;
}

}  // namespace

CachedInverse cached_inverse(std::function<Complex(double)> h,
                             double h_decay_rate, double g_decay_rate,
                             double tol, const QuadratureConfig& cfg) {
  require(h_decay_rate > 0.0 && g_decay_rate > 0.0,
          ErrorCode::invalid_argument,
          "inverse transform needs positive decay rates");
  require(tol > 0.0 && tol < 1.0, ErrorCode::invalid_argument,
          "cache tolerance out of range");
  CachedInverse ci;
  ci.h_radius = (-std::log(tol) + 5.0) / h_decay_rate;
  ci.g_radius = (-std::log(tol) + 5.0) / g_decay_rate;

  auto h_cheb = std::make_shared<PiecewiseChebyshev>(
      h, segment_breaks(ci.h_radius, 3.0), 48);
  double hr = ci.h_radius;
  auto h_model = [h_cheb, hr](double r) -> Complex {
    return r > hr ? Complex(0.0) : (*h_cheb)(r);
  };
  ci.h = h_model;

  ci.g = [h_model, hr](double u) {
    return finite_oscillatory(h_model, hr, u, false) / M_PI;
  };

  auto gp_raw = [h_model, hr](double w) {
    auto rh = [&](double r) { return h_model(r) * r; };
    return -finite_oscillatory(rh, hr, w, true) / M_PI;
  };
  auto gp_cheb = std::make_shared<PiecewiseChebyshev>(
      gp_raw, segment_breaks(ci.g_radius, 3.0), 48);
  double gr = ci.g_radius;
  auto gp_model = [gp_cheb, gr](double w) -> Complex {
    return w > gr ? Complex(0.0) : (*gp_cheb)(w);
  };
  ci.g_prime = gp_model;

  double rate = 2.0 * g_decay_rate + 1.0;
  ci.k = [gp_model, rate, cfg](double u) -> Complex {
    require(u > 0.0, ErrorCode::domain,
            "inverse transform kernel requires u > 0");
    auto integrand = [&](double tau) -> Complex {
      double sh = std::sinh(tau);
      double v = u + sh * sh;
      double w = 2.0 * std::asinh(std::sqrt(v));
      return gp_model(w) * std::cosh(tau) / std::sqrt(v * (v + 1.0));
    };
    return -integrate_to_infinity(integrand, 0.0, rate, cfg) / M_PI;
  };
  return ci;
}

}  // namespace wck::selberg
