#include "core/specfun.hpp"

#include <cmath>

namespace wck {

namespace {

constexpr double kLanczosG = 4.7421875;  // 607/128
constexpr double kLanczosCoeff[] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    3.3994649984811888699e-5,
    4.6523628927048575665e-5,
    -9.8374475304879564677e-5,
    1.5808870322491248884e-4,
    -2.1026444172410488319e-4,
    2.1743961811521264320e-4,
    -1.6431810653676389022e-4,
    8.4418223983852743293e-5,
    -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};
constexpr double kLogSqrtTwoPi = 0.91893853320467274178;

bool near_nonpositive_integer(const Complex& z, double tol = 1e-13) {
  if (z.real() > 0.5) return false;
  double n = std::round(z.real());
  return n <= 0.0 && std::abs(z.real() - n) < tol && std::abs(z.imag()) < tol;
}

// log sin(pi z) without overflow for large |Im z|; branch chosen to keep
// exp(log_sin_pi) exact, which is all downstream users need.
Complex log_sin_pi(const Complex& z) {
  const Complex i(0.0, 1.0);
  if (z.imag() > 0.0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
    return std::log(Complex(0.0, 0.5)) - i * M_PI * z +
           std::log(1.0 - std::exp(2.0 * i * M_PI * z));
  }
  return std::log(Complex(0.0, -0.5)) + i * M_PI * z +
         std::log(1.0 - std::exp(-2.0 * i * M_PI * z));
}

Complex log_gamma_lanczos(const Complex& z) {
  Complex sum = kLanczosCoeff[0];
  for (int k = 1; k < 15; ++k) sum += kLanczosCoeff[k] / (z + double(k - 1));
  Complex t = z + (kLanczosG - 0.5);
  return kLogSqrtTwoPi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

Complex log_gamma(const Complex& z) {
  require(finite(z), ErrorCode::invalid_argument, "log_gamma: non-finite input");
  require(!near_nonpositive_integer(z), ErrorCode::pole,
          "log_gamma evaluated at a pole");
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
  return std::log(M_PI) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

Complex gamma_fn(const Complex& z) { return std::exp(log_gamma(z)); }

Complex pochhammer(const Complex& a, int k) {
  require(k >= 0, ErrorCode::invalid_argument, "pochhammer: negative order");
  Complex p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + double(j);
  return p;
}

Complex gauss_2f1(const Complex& a, const Complex& b, const Complex& c,
                  double x, double tol) {
  require(x > -1.0 && x < 1.0, ErrorCode::domain,
          "gauss_2f1: argument outside (-1, 1)");
  require(!near_nonpositive_integer(c), ErrorCode::pole,
          "gauss_2f1: lower parameter at a pole");
  Complex term = 1.0;
  Accumulator sum;
  sum.add(term);
  // Worst admissible geometric ratio once k dominates the parameters.
  for (int k = 0; k < 5000000; ++k) {
    term *= (a + double(k)) * (b + double(k)) /
            ((c + double(k)) * double(k + 1)) * x;
    sum.add(term);
    double ratio =
        std::abs((a + double(k + 1)) * (b + double(k + 1)) /
                 ((c + double(k + 1)) * double(k + 2))) * std::abs(x);
    if (ratio < 1.0) {
      double tail = std::abs(term) * ratio / (1.0 - ratio);
      if (tail <= tol * std::max(1.0, std::abs(sum.value()))) return sum.value();
    }
  }
  fail(ErrorCode::convergence, "gauss_2f1: series did not converge");
}

Complex gauss_2f1_near_one(const Complex& a, const Complex& b,
                           const Complex& c, double x, double tol) {
    require(x >= 0.0 && x < 1.0, ErrorCode::domain,
            "gauss_2f1_near_one: x must lie in [0, 1)");
    const Complex cab = c - a - b;
    const double int_dist =
        std::abs(cab.real() - std::round(cab.real())) + std::abs(cab.imag());
    require(int_dist > 1e-9, ErrorCode::pole,
            "gauss_2f1_near_one: c-a-b too close to an integer");
    const double y = 1.0 - x;
    const Complex term1 =
        std::exp(log_gamma(c) + log_gamma(cab) - log_gamma(c - a) -
                 log_gamma(c - b)) *
        gauss_2f1(a, b, a + b - c + 1.0, y, tol);
    const Complex term2 =
        std::exp(log_gamma(c) + log_gamma(-cab) - log_gamma(a) -
                 log_gamma(b) + cab * std::log(y)) *
        gauss_2f1(c - a, c - b, cab + 1.0, y, tol);
    return term1 + term2;
}

Complex hypergeom_point_term(const Complex& nu, double exp_minus_xi) {
    require(exp_minus_xi > 0.0 && exp_minus_xi < 1.0, ErrorCode::domain,
            "hypergeom_point_term: requires 0 < e^{-xi} < 1");
    const double y = exp_minus_xi;
    return std::exp(nu * std::log(2.0 * y)) *
           gauss_2f1(nu, Complex(0.5, 0.0), nu + 0.5, y * y);
}

Complex gauss_2f1_euler(const Complex& a, const Complex& b, const Complex& c,
                        double x, double tol) {
  return std::pow(Complex(1.0 - x), c - a - b) *
         gauss_2f1(c - a, c - b, c, x, tol);
}

namespace {

// Defining series route, 8.820-style: with u = (x-1)/2,
// P_{-1/2+ir}(1+2u) = Re[(1+u)^{-1/2+ir} F(1/2-ir, 1/2-ir; 1; u/(u+1))].
double conical_p_series(const Complex& r, double x) {
  double u = 0.5 * (x - 1.0);
  double y = u / (u + 1.0);
  Complex mu = Complex(-0.5, 0.0) + Complex(0.0, 1.0) * r;
  Complex f = gauss_2f1(-mu, -mu, 1.0, y);
  Complex val = std::pow(Complex(1.0 + u), mu) * f;
  return val.real();
}

// Mehler-Dirichlet integral, regularised at the endpoint with t = xi - v^2:
// P(cosh xi) = (sqrt2/pi) int_0^xi cos(r t) / sqrt(cosh xi - cosh t) dt.
double conical_p_mehler(const Complex& r, double x) {
  double xi = std::acosh(x);
  double freq = std::abs(r.real());
  auto integrand = [&](double v) -> Complex {
    double t = xi - v * v;
    // cosh(xi) - cosh(t) = 2 sinh((xi+t)/2) sinh((xi-t)/2); the product form
    // survives t -> xi where the difference of coshes loses every digit.
    double half = 0.5 * v * v;
    double s2 = std::sinh(half);
    double reg = s2 > 0.0
                     ? 2.0 * v / std::sqrt(2.0 * std::sinh(xi - half) * s2)
                     : 2.0 / std::sqrt(std::sinh(xi));
    return std::cos(r * t) * reg;
  };
  double vmax = std::sqrt(xi);
  // cos(r (xi - v^2)) oscillates in v with local frequency 2 r v.
  int panels = std::max(8, int(std::ceil(freq * xi / 2.0)) + 8);
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-14;
  cfg.rel_tol = 1e-13;
  Accumulator acc;
  for (int i = 0; i < panels; ++i) {
    double a = vmax * i / panels, b = vmax * (i + 1) / panels;
    acc.add(integrate(integrand, a, b, cfg));
  }
  return acc.value().real() * (M_SQRT2 / M_PI);
}

}  // namespace

double legendre_p_conical(const Complex& r, double x) {
  require(x >= 1.0, ErrorCode::domain, "legendre_p_conical: x must be >= 1");
  require(std::abs(r.real()) < 1e-12 || std::abs(r.imag()) < 1e-12,
          ErrorCode::domain, "legendre_p_conical: r must be real or imaginary");
  require(std::abs(r.imag()) <= 0.5 + 1e-12, ErrorCode::domain,
          "legendre_p_conical: |Im r| must stay within 1/2");
  if (x == 1.0) return 1.0;
  double u = 0.5 * (x - 1.0);
  double y = u / (u + 1.0);
  // The series terms peak near e^{2 |r| sqrt(y)}; beyond that cancellation
  // costs digits, and past u = 5 the argument is too close to 1.
  double cancellation = 2.0 * std::abs(r) * std::sqrt(y);
  if (u <= 5.0 && cancellation <= 16.0) return conical_p_series(r, x);
  return conical_p_mehler(r, x);
}

Complex legendre_q(const Complex& nu, double x) {
  require(x > 1.0, ErrorCode::domain, "legendre_q: x must be > 1");
  require(nu.real() > -1.0, ErrorCode::domain, "legendre_q: need Re nu > -1");
  Complex pref = std::exp(log_gamma(nu + 1.0) - log_gamma(nu + 1.5)) *
                 std::sqrt(M_PI) * std::pow(Complex(2.0 * x), -(nu + 1.0));
  return pref *
         gauss_2f1(0.5 * nu + 1.0, 0.5 * nu + 0.5, nu + 1.5, 1.0 / (x * x));
}

Complex legendre_q_exp_arg(const Complex& nu, double exp_minus_xi) {
  require(exp_minus_xi > 0.0 && exp_minus_xi < 1.0, ErrorCode::domain,
          "legendre_q_exp_arg: e^{-xi} must lie in (0, 1)");
  require(nu.real() > -1.0, ErrorCode::domain,
          "legendre_q_exp_arg: need Re nu > -1");
  double y = exp_minus_xi * exp_minus_xi;
  Complex pref = std::exp(log_gamma(nu + 1.0) - log_gamma(nu + 1.5)) *
                 std::sqrt(M_PI) * std::pow(Complex(exp_minus_xi), nu + 1.0);
  return pref * gauss_2f1(nu + 1.0, 0.5, nu + 1.5, y);
}

Complex conical_split_h(const Complex& nu, double u) {
  require(u > 0.0, ErrorCode::domain, "conical_split_h: u must be positive");
  require(std::abs(nu - 0.5) > 1e-10, ErrorCode::pole,
          "conical_split_h: nu = 1/2 hits Gamma(1-2nu)");
  double x = 1.0 + 2.0 * u;
  Complex pref = std::pow(Complex(2.0), nu) *
                 std::exp(log_gamma(1.0 - 2.0 * nu) -
                          2.0 * log_gamma(1.0 - nu)) *
                 std::pow(Complex(x), -nu);
  return pref * gauss_2f1(0.5 * nu, 0.5 * (nu + 1.0), nu + 0.5,
                          1.0 / (x * x));
}

Complex a_coeff(const Complex& nu, const Complex& s) {
  Complex g1 = 0.5 * (s - nu);
  Complex g2 = 0.5 * (s - 1.0 + nu);
  require(!near_nonpositive_integer(g1) && !near_nonpositive_integer(g2),
          ErrorCode::pole, "a_coeff: Gamma pole in the numerator");
  return std::pow(Complex(2.0), s - 1.0) * std::sqrt(M_PI) *
         std::exp(log_gamma(g1) + log_gamma(g2) - log_gamma(s));
}

Complex b_coeff(const Complex& nu, int k) {
  return pochhammer(0.5 * nu, k) * pochhammer(0.5 * nu + 0.5, k) /
         pochhammer(nu + 0.5, k);
}

Complex c_coeff(const Complex& nu) {
  const Complex i(0.0, 1.0);
  return std::pow(Complex(2.0), -nu - 1.0) *
         std::exp(log_gamma(nu) - log_gamma(nu - 0.5)) /
         (std::pow(M_PI, 1.5) * i);
}

}  // namespace wck
