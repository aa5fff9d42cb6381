#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wck {

using Complex = std::complex<double>;

// Error taxonomy shared by every module. Each maps 1:1 onto a C API status
// code, so callers above the C boundary can distinguish a divergent transform
// from a bad argument without parsing message text.
enum class ErrorCode {
  invalid_argument,
  domain,        // input outside the operation's mathematical domain
  divergence,    // integral or series provably non-convergent for these params
  singularity,   // evaluation point collides with a pole/orbit point
  pole,          // gamma-function pole hit in a coefficient
  resource,      // configured cap (cardinality, panel count, terms) exceeded
  convergence,   // iteration failed to reach tolerance within its cap
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Accumulator in extended precision. Oscillatory integrals cancel ten orders
// of magnitude at the largest acceptance frequencies; 64-bit partial sums
// would leave roundoff right at the pass threshold.
class Accumulator {
public:
  void add(double x) { sum_ += static_cast<long double>(x); }
  void add(const Complex& z) {
    re_ += static_cast<long double>(z.real());
    im_ += static_cast<long double>(z.imag());
  }
  double real() const { return static_cast<double>(sum_ + re_); }
  Complex value() const {
    return {static_cast<double>(sum_ + re_), static_cast<double>(im_)};
  }

private:
  long double sum_ = 0.0L;
  long double re_ = 0.0L;
  long double im_ = 0.0L;
};

inline bool finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// x^{-s} for x > 0. Real exponents skip the complex exponential, small
// integer exponents skip the log as well; group sums spend most of their
// time here.
inline Complex pow_minus(double x, const Complex& s) {
  if (s.imag() == 0.0) {
    const double sr = s.real();
    const int n = int(sr);
    if (double(n) == sr && n >= 0 && n <= 16) {
      double p = 1.0, b = 1.0 / x;
      int m = n;
      while (m) {
        if (m & 1) p *= b;
        b *= b;
        m >>= 1;
      }
      return Complex(p, 0.0);
    }
    return Complex(std::exp(-sr * std::log(x)), 0.0);
  }
  const double lx = std::log(x);
  return std::polar(std::exp(-s.real() * lx), -s.imag() * lx);
}

}  // namespace wck
