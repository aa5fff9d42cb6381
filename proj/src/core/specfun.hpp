#pragma once

#include "core/quadrature.hpp"
#include "core/util.hpp"

namespace wck {

// Principal-branch log Gamma: Lanczos rational approximation on
// Re z >= 1/2, reflection formula elsewhere. Poles raise ErrorCode::pole.
Complex log_gamma(const Complex& z);
Complex gamma_fn(const Complex& z);

// (a)_k = a (a+1) ... (a+k-1); k = 0 gives 1.
Complex pochhammer(const Complex& a, int k);

// Gauss hypergeometric series for real x in [0, 1) and complex parameters.
// Plain power series with a tail-bound stopping rule; callers are expected
// to transform arguments into this range first.
Complex gauss_2f1(const Complex& a, const Complex& b, const Complex& c,
                  double x, double tol = 1e-15);

// Same value through the Euler transformation
// (1-x)^{c-a-b} F(c-a, c-b; c; x); independent code path used for checks.
Complex gauss_2f1_euler(const Complex& a, const Complex& b, const Complex& c,
                        double x, double tol = 1e-15);

// Connection formula in 1-x for x near 1; requires c-a-b away from the
// integers (ErrorCode::pole otherwise). Used where the direct series would
// need ~1/(1-x) terms.
Complex gauss_2f1_near_one(const Complex& a, const Complex& b,
                           const Complex& c, double x, double tol = 1e-15);

// Series-friendly form of the radial hypergeometric kernel summand:
//   cosh^{-nu}(xi) F(nu/2, nu/2+1/2; nu+1/2; sech^2 xi)
//     = (2 e^{-xi})^nu F(nu, 1/2; nu+1/2; e^{-2 xi}),
// whose series has uniformly bounded terms for Re nu > 0, including the
// large |Im nu| needed on contour integrals. Takes y = e^{-xi}.
Complex hypergeom_point_term(const Complex& nu, double exp_minus_xi);

// Conical (Mehler) function P_{-1/2 + ir}(x) for x >= 1. r real or purely
// imaginary with |Im r| <= 1/2. Route selection: hypergeometric series in
// u/(u+1) while the series stays cancellation-free, else the Mehler-
// Dirichlet integral with oscillation-resolving panels.
double legendre_p_conical(const Complex& r, double x);

// Legendre function of the second kind, degree nu (Re nu > -1), x > 1,
// via the hypergeometric representation in 1/x^2 with Gamma prefactor.
Complex legendre_q(const Complex& nu, double x);

// Equivalent exponential-argument form
//   Q_nu(cosh xi) = sqrt(pi) Gamma(nu+1)/Gamma(nu+3/2)
//                   e^{-(nu+1) xi} F(nu+1, 1/2; nu+3/2; e^{-2 xi}),
// numerically stable for large |Im nu|; takes y = e^{-xi} directly.
Complex legendre_q_exp_arg(const Complex& nu, double exp_minus_xi);

// One branch of the conical splitting
//   P_{-1/2+ir}(1+2u) = H(1/2+ir, u) + H(1/2-ir, u),
//   H(nu, u) = 2^nu Gamma(1-2nu)/Gamma(1-nu)^2 (1+2u)^{-nu}
//              F(nu/2, (nu+1)/2; nu+1/2; (1+2u)^{-2}).
// nu = 1/2 (r = 0) hits the Gamma(1-2nu) pole.
Complex conical_split_h(const Complex& nu, double u);

// a_nu(s) = 2^{s-1} sqrt(pi) Gamma((s-nu)/2) Gamma((s-1+nu)/2) / Gamma(s).
Complex a_coeff(const Complex& nu, const Complex& s);

// b_k(nu) = (nu/2)_k (nu/2+1/2)_k / (nu+1/2)_k.
Complex b_coeff(const Complex& nu, int k);

// c(nu) = 2^{-nu-1} Gamma(nu) / (Gamma(nu-1/2) pi^{3/2} i).
Complex c_coeff(const Complex& nu);

}  // namespace wck
