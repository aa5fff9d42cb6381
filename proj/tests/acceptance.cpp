// Acceptance gates. Each criterion exercises one end-to-end claim of the
// library at full working precision and prints exactly one line:
//   [PASS] <n> <what was measured>
//   [FAIL] <n> <what was measured and by how much it missed>
// Run with no arguments for all twelve, or `--only <n>` for a single one
// (that is how the ctest entries invoke it). Exit code 0 iff everything
// that ran passed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "core/checks.hpp"
#include "core/eisenstein.hpp"
#include "core/geometry.hpp"
#include "core/kernels.hpp"
#include "core/modular.hpp"
#include "core/selberg.hpp"
#include "core/specfun.hpp"
#include "core/util.hpp"

using namespace wck;

namespace {

double rel_err(const Complex& a, const Complex& b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

struct Result {
  bool pass = false;
  std::string detail;
};

Result made(bool pass, const std::string& detail) { return {pass, detail}; }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// 1. Quadrature transform of the cosh-power test function against its
//    closed-form symbol on a 4x4 (s, r) grid.
Result criterion_1() {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-15;
  cfg.rel_tol = 1e-12;
  double worst = 0.0;
  for (double s : {1.5, 2.0, 3.0, 4.5})
    for (double r : {0.0, 0.5, 2.0, 10.0}) {
      const Complex got =
          selberg::h_transform(selberg::test_g(s), Complex(r, 0.0), cfg);
      const Complex want = selberg::h_closed_form(s, Complex(r, 0.0));
      worst = std::max(worst, rel_err(got, want));
    }
  return made(worst < 1e-8, "transform vs closed form, 16-point grid: max rel " +
                                num(worst) + " (tol 1e-08)");
}

// 2. Full quadrature pipeline (forward transform, inverse transform, group
//    sum) against the directly summed cosh-power kernel.
Result criterion_2() {
  const UhpPoint z(0.0, 2.0), w(1.0, 1.0);
  TruncationBudget budget;
  budget.group_bound = 40.0;
  double worst = 0.0;
  for (double s : {2.0, 3.0}) {
    const KernelValue wave = wave_action(z, w, selberg::test_g(s), budget, {},
                                         WaveMode::pipeline);
    const KernelValue direct = automorphic_K(z, w, Complex(s, 0.0), budget);
    worst = std::max(worst, rel_err(wave.value, direct.value));
  }
  return made(worst < 1e-5, "pipeline wave action vs kernel sum, s in {2,3}: "
                            "max rel " + num(worst) + " (tol 1e-05)");
}

// 3. Shift identity between the transforms at s and s + 2n, including a
//    purely imaginary spectral parameter.
Result criterion_3() {
  double worst = 0.0;
  bool all_pass = true;
  for (double s : {1.5, 2.7})
    for (double n : {1.0, 2.0})
      for (Complex r : {Complex(0.0, 0.0), Complex(1.3, 0.0),
                        Complex(0.0, 0.25)}) {
        CheckSpec spec = default_spec("shift_identity");
        spec.params["s"] = s;
        spec.params["n"] = n;
        spec.params["r"] = r;
        spec.tolerance = 1e-10;
        const CheckReport rep = run_check(spec);
        all_pass = all_pass && rep.verdict == Verdict::pass;
        worst = std::max(worst, rep.residual);
      }
  return made(all_pass && worst < 1e-10,
              "shift identity, 12 parameter triples: max residual " +
                  num(worst) + " (tol 1e-10)");
}

// 4. Hyperbolic series against the arclength integral of the cosh-power
//    kernel over the closed geodesic, both truncated independently.
Result criterion_4() {
  const auto& fx = standard_fixtures();
  double worst = 0.0;
  for (double zx : {0.0, 1.0})
    for (double s : {2.0, 3.0}) {
      // the s = 2 terms decay like exp(-2d), so that case needs a deeper
      // ball than s = 3 to push both truncations below the tolerance
      const double bound = s == 2.0 ? 1100.0 : 500.0;
      TruncationBudget budget;
      budget.group_bound = bound;
      const UhpPoint z(zx, 2.0);
      const EisensteinValue direct =
          eisenstein_hyperbolic(z, Complex(s, 0.0), fx.gamma_21_11, bound);
      const EisensteinValue arc = hyperbolic_via_integral(
          z, Complex(s, 0.0), fx.gamma_21_11, budget);
      worst = std::max(worst, rel_err(direct.value, arc.value));
    }
  return made(worst < 1e-5, "geodesic-integral route vs direct hyperbolic "
                            "series, 4 cases: max rel " + num(worst) +
                            " (tol 1e-05)");
}

// 5. Binomial k-series through the cosh-power kernels against ord(w) times
//    the direct elliptic series, reported tails counted against the budget.
Result criterion_5() {
  const int kmax = 60;
  const UhpPoint z(0.0, 2.0);
  const auto& fx = standard_fixtures();
  double worst_resid = 0.0, worst_total = 0.0;
  for (const EllipticPointData* data : {&fx.at_i, &fx.at_rho}) {
    for (double s : {2.0, 3.0}) {
      // the s = 2 shells decay like exp(-d): a ball of radius ~2300 is what
      // it takes to drive both group tails below the 1e-6 budget, so the
      // full-ball side streams instead of materializing the element list
      const double bound = s == 2.0 ? 2300.0 : 800.0;
      std::vector<double> coeff(kmax + 1);
      coeff[0] = 1.0;
      for (int k = 0; k < kmax; ++k)
        coeff[k + 1] = coeff[k] * (0.5 * s + k) / (k + 1);
      Accumulator acc;
      ShellTail shell;
      double k_remainder = 0.0;
      for_each_element(bound, [&](const GroupElement& eta) {
        const UhpPoint ew = apply(eta.as_moebius(), data->point);
        const double c = 1.0 / cosh_dist(z, ew);
        const double c2 = c * c;
        double ck = std::pow(c, s);
        double element_sum = 0.0;
        int k = 0;
        for (; k <= kmax; ++k) {
          element_sum += coeff[k] * ck;
          ck *= c2;
          if (k + 1 <= kmax && coeff[k + 1] * ck < 1e-20 * element_sum) break;
        }
        if (k > kmax - 1)  // ran the full budget: bound what was cut
          k_remainder += coeff[kmax] * ck / (1.0 - 1.1 * c2);
        acc.add(element_sum);
        shell.add(dist(z, ew), element_sum);
      });
      const Complex lhs = acc.value();
      const double lhs_tail = shell.estimate(s) + k_remainder;

      const auto cosets = elliptic_cosets(*data, bound);
      const EisensteinValue ell =
          eisenstein_elliptic(z, Complex(s, 0.0), *data, cosets);
      const Complex rhs = double(data->order) * ell.value;
      const double rhs_tail = double(data->order) * ell.tail_estimate;

      const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
      const double resid = std::abs(lhs - rhs) / scale;
      worst_resid = std::max(worst_resid, resid);
      worst_total = std::max(worst_total, resid + (lhs_tail + rhs_tail) / scale);
    }
  }
  return made(worst_total < 1e-6,
              "kernel k-series vs ord(w) x elliptic series, 4 cases: max rel " +
                  num(worst_resid) + ", max rel incl. tails " +
                  num(worst_total) + " (tol 1e-06)");
}

// 6. Series expansions of the two layered test functions, pointwise, plus
//    the beta = 0 reduction to the elliptic test function (two routes).
Result criterion_6() {
  const Complex s(2.2, 0.0), beta(3.0, 0.0);
  const int terms = 220;  // geometric tail sech^2(1/2)^terms ~ 1e-23
  const auto G = selberg::test_G(s, beta);
  const auto Gt = selberg::test_G_tilde(s, beta);
  double worst = 0.0;
  for (double u : {0.0, 0.5, 1.0, 2.0}) {
    worst = std::max(
        worst, rel_err(selberg::g_series_partial(s, beta, u, terms), G.eval(u)));
    worst = std::max(worst, rel_err(selberg::g_tilde_series_partial(
                                        s, beta, u, terms),
                                    Gt.eval(u)));
  }
  const auto G0 = selberg::test_G(s, Complex(0.0, 0.0));
  const auto ge = selberg::test_g_elliptic(s);
  double worst_red = 0.0;
  for (double u : {0.5, 1.0, 2.0})
    worst_red = std::max(worst_red, rel_err(G0.eval(u), ge.eval(u)));
  double worst_dual = 0.0;
  for (double u : {2.0, 2.5, 3.0})
    worst_dual = std::max(worst_dual,
                          rel_err(ge.eval(u), selberg::g_elliptic_direct(s, u)));
  return made(worst < 1e-10 && worst_red < 1e-12 && worst_dual < 1e-10,
              "layered series max rel " + num(worst) +
                  " (tol 1e-10), beta=0 reduction " + num(worst_red) +
                  " (tol 1e-12), dual elliptic route " + num(worst_dual) +
                  " (tol 1e-10)");
}

// 7. Conical Legendre function against its two-branch hypergeometric split
//    on a 3x3 grid, and the Legendre Q spectral-integral identity.
Result criterion_7() {
  double worst = 0.0;
  for (double r : {0.4, 1.3, 3.0})
    for (double u : {0.2, 0.8, 2.5}) {
      const double lhs = legendre_p_conical(Complex(r, 0.0), 1.0 + 2.0 * u);
      const Complex rhs = conical_split_h(Complex(0.5, r), u) +
                          conical_split_h(Complex(0.5, -r), u);
      worst = std::max(worst, rel_err(Complex(lhs, 0.0), rhs));
    }
  const CheckReport q = run_check(default_spec("Q_contour"));
  const bool q_ok = q.verdict == Verdict::pass && q.residual < 1e-6;
  return made(worst < 1e-9 && q_ok,
              "conical split 3x3 grid: max rel " + num(worst) +
                  " (tol 1e-09); Q spectral integral residual " +
                  num(q.residual) + " (tol 1e-06)");
}

// 8. Vertical-contour representation of the Green's function at growing
//    contour heights: absolute agreement at T = 400 and the error-halving
//    ratio expected of an integrand decaying like (1+|nu|)^{-3/2}.
Result criterion_8() {
  const UhpPoint z(0.0, 2.0), w(1.0, 1.0);
  const Complex s(2.0, 0.0);
  TruncationBudget budget;
  budget.group_bound = 40.0;
  const KernelValue direct = greens_function(z, w, s, budget);
  const auto s400 = greens_contour(z, w, s, 0.25, 400.0, budget);
  const auto s800 = greens_contour(z, w, s, 0.25, 800.0, budget);
  const double rel400 = rel_err(s400.value, direct.value);
  const double rel800 = rel_err(s800.value, direct.value);
  const double ratio = rel800 / std::max(rel400, 1e-300);
  const bool ok = rel400 < 5e-3 && ratio >= 0.3 && ratio <= 0.8;
  return made(ok, "contour vs direct resolvent: rel(T=400) " + num(rel400) +
                      " (tol 5e-03), doubling ratio " + num(ratio) +
                      " (band [0.3, 0.8])");
}

// 9. Parabolic series: horocycle-average route at two heights against the
//    direct coset sum, and the direct sum against a brute-force coprime
//    lattice oracle.
Result criterion_9() {
  const UhpPoint z(0.0, 1.0);
  const Complex s(2.0, 0.0);
  const EisensteinValue direct = eisenstein_parabolic(z, s, 2000);

  // oracle: all coprime pairs in a Euclidean disc, one per +- pair
  Accumulator brute;
  brute.add(1.0);  // the (0, 1) coset at z = i
  const int64_t radius = 3000;
  for (int64_t c = 1; c <= radius; ++c) {
    const int64_t dmax = int64_t(std::sqrt(double(radius * radius - c * c)));
    for (int64_t d = -dmax; d <= dmax; ++d) {
      if (std::gcd(c, d < 0 ? -d : d) != 1) continue;
      const double n = double(c * c + d * d);
      brute.add(1.0 / (n * n));
    }
  }
  const double rel_oracle = rel_err(direct.value, brute.value());

  // the horocycle at height a only meets group translates of norm up to
  // ~bound/a, so the higher horocycle is the accuracy bottleneck; 1150 is
  // the deepest ball the element enumerator admits at its default cap
  TruncationBudget b10, b20;
  b10.group_bound = 1150.0;
  b20.group_bound = 1150.0;
  const EisensteinValue r10 = parabolic_via_horocycle(z, s, 10.0, b10);
  const EisensteinValue r20 = parabolic_via_horocycle(z, s, 20.0, b20);
  const double rel10 = rel_err(r10.value, direct.value);
  const double rel_heights = rel_err(r10.value, r20.value);
  const bool ok = rel_oracle < 1e-6 && rel10 < 1e-4 && rel_heights < 1e-4;
  return made(ok, "horocycle route: rel vs direct " + num(rel10) +
                      ", height independence " + num(rel_heights) +
                      " (tol 1e-04); direct vs lattice oracle " +
                      num(rel_oracle) + " (tol 1e-06)");
}

// 10. Finite-difference eigenvalue equations of the hyperbolic and elliptic
//     series (opposite signs on the shifted term).
Result criterion_10() {
  const CheckReport hyp = run_check(default_spec("pde_hyp"));
  const CheckReport ell = run_check(default_spec("pde_ell"));
  const bool ok = hyp.verdict == Verdict::pass && hyp.residual < 1e-4 &&
                  ell.verdict == Verdict::pass && ell.residual < 1e-4;
  return made(ok, "eigenvalue equations: hyperbolic residual " +
                      num(hyp.residual) + ", elliptic residual " +
                      num(ell.residual) + " (tol 1e-04)");
}

// 11. Kernel sanity: unit heat mass, the scalar subordination identity, and
//     randomized invariant suites (100 samples each) for the geometry and
//     the periodized kernels.
Result criterion_11() {
  const CheckReport mass = run_check(default_spec("heat_mass"));
  const CheckReport sub = run_check(default_spec("poisson_scalar"));
  bool ok = mass.verdict == Verdict::pass && mass.residual < 1e-4 &&
            sub.verdict == Verdict::pass && sub.residual < 1e-9;

  std::mt19937 gen(0xacce97ed);
  auto uni = [&](double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(gen);
  };
  auto point = [&]() { return UhpPoint(uni(-3.0, 3.0), std::exp(uni(-2.0, 2.0))); };
  auto word = [&]() {
    MoebiusReal m;
    const MoebiusReal T(1, 1, 0, 1), Ti(1, -1, 0, 1), S(0, -1, 1, 0);
    const int len = int(uni(1.0, 12.0));
    for (int i = 0; i < len; ++i) {
      const double pick = uni(0.0, 3.0);
      m = m * (pick < 1.0 ? T : pick < 2.0 ? Ti : S);
    }
    return m;
  };

  int bad_geometry = 0;
  for (int i = 0; i < 100; ++i) {
    const UhpPoint a = point(), b = point(), v = point();
    const MoebiusReal g = word();
    const double u = u_invariant(a, b);
    if (std::abs(u_invariant(apply(g, a), apply(g, b)) - u) >
        1e-10 * (1.0 + u))
      ++bad_geometry;
    if (u_invariant(b, a) != u_invariant(a, b)) ++bad_geometry;
    if (dist(a, b) > dist(a, v) + dist(v, b) + 1e-12) ++bad_geometry;
  }

  TruncationBudget small;
  small.group_bound = 12.0;
  int bad_kernel = 0;
  for (int i = 0; i < 100; ++i) {
    const UhpPoint a = point(), b = point();
    const KernelValue k1 = automorphic_K(a, b, Complex(2.5, 0.0), small);
    const KernelValue k2 = automorphic_K(b, a, Complex(2.5, 0.0), small);
    if (!(k1.value.real() > 0.0)) ++bad_kernel;
    if (std::abs(k1.value.imag()) > 1e-12 * k1.value.real()) ++bad_kernel;
    if (rel_err(k1.value, k2.value) > 1e-12) ++bad_kernel;
  }
  for (int i = 0; i < 100; ++i) {
    const double d1 = std::exp(uni(-2.0, 1.2));
    const double d2 = d1 + std::exp(uni(-2.0, 0.5));
    const double t = std::exp(uni(-1.0, 1.0));
    const double k1 = heat_kernel_plane_radial(d1, t);
    const double k2 = heat_kernel_plane_radial(d2, t);
    if (!(k1 > 0.0 && k2 > 0.0 && k1 > k2)) ++bad_kernel;
  }
  ok = ok && bad_geometry == 0 && bad_kernel == 0;
  return made(ok, "heat mass residual " + num(mass.residual) +
                      " (tol 1e-04), subordination residual " +
                      num(sub.residual) + " (tol 1e-09), invariant "
                      "violations " + std::to_string(bad_geometry) + "+" +
                      std::to_string(bad_kernel) + " of 300 samples");
}

// 12. Divergence guard: the forward transform of the sinh-power kernel must
//     refuse s = 2.5 and carry s = 1.5 through a finite Q stage.
Result criterion_12() {
  bool threw_right = false;
  try {
    selberg::forward_h(selberg::sinh_power_kernel(Complex(2.5, 0.0)),
                       Complex(0.5, 0.0));
  } catch (const Error& e) {
    threw_right = e.code() == ErrorCode::divergence;
  }
  const auto stages =
      selberg::forward_stages(selberg::sinh_power_kernel(Complex(1.5, 0.0)));
  const bool q_finite = finite(stages.big_q(0.4));
  const CheckReport rep = run_check(default_spec("sinh_transform_guard"));
  const bool ok = threw_right && q_finite && rep.verdict == Verdict::pass;
  return made(ok, std::string("sinh-power transform: s=2.5 ") +
                      (threw_right ? "rejected as divergent" : "NOT rejected") +
                      ", s=1.5 Q stage " +
                      (q_finite ? "finite" : "not finite") +
                      ", guard check " + verdict_name(rep.verdict));
}

struct Criterion {
  int id;
  Result (*run)();
};

const Criterion kCriteria[] = {
    {1, criterion_1},  {2, criterion_2},  {3, criterion_3},
    {4, criterion_4},  {5, criterion_5},  {6, criterion_6},
    {7, criterion_7},  {8, criterion_8},  {9, criterion_9},
    {10, criterion_10}, {11, criterion_11}, {12, criterion_12},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::strcmp(argv[1], "--only") == 0) {
    only = std::atoi(argv[2]);
    if (only < 1 || only > 12) {
      std::fprintf(stderr, "acceptance: --only wants 1..12\n");
      return 2;
    }
  } else if (argc != 1) {
    std::fprintf(stderr, "usage: acceptance [--only <n>]\n");
    return 2;
  }

  bool all_pass = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = made(false, std::string("unexpected error: ") + e.what());
    }
    std::printf("[%s] %d %s\n", r.pass ? "PASS" : "FAIL", c.id,
                r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
