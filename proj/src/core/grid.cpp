#include "core/grid.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "core/eisenstein.hpp"
#include "core/modular.hpp"

namespace wck {

namespace {

struct Sample {
  Complex value;
  double tail = 0.0;
};

struct FieldDef {
  std::string fn;
  std::map<std::string, Complex> defaults;
  std::function<Sample(const UhpPoint&, const std::map<std::string, Complex>&,
                       const GridRequest&)>
      eval;
};

Complex get(const std::map<std::string, Complex>& m, const std::string& k) {
  return m.at(k);
}

UhpPoint get_point(const std::map<std::string, Complex>& m,
                   const std::string& k) {
  const Complex v = m.at(k);
  require(v.imag() > 0.0, ErrorCode::invalid_argument,
          "grid parameter '" + k + "' must lie in the upper half-plane");
  return UhpPoint(v);
}

int get_int(const std::map<std::string, Complex>& m, const std::string& k) {
  const Complex v = m.at(k);
  const long long n = std::llround(v.real());
  require(v.imag() == 0.0 && std::abs(v.real() - double(n)) < 1e-12,
          ErrorCode::invalid_argument,
          "grid parameter '" + k + "' must be an integer");
  return int(n);
}

const std::vector<FieldDef>& fields() {
  static const std::vector<FieldDef> defs = [] {
    std::vector<FieldDef> v;
    const Complex I(0.0, 1.0);
    v.push_back({"K_s",
                 {{"s", 3.0}, {"w", 1.0 + I}},
                 [](const UhpPoint& z, const auto& p, const GridRequest& r) {
                   const KernelValue k =
                       automorphic_K(z, get_point(p, "w"), get(p, "s"),
                                     r.budget);
                   return Sample{k.value, k.tail_estimate};
                 }});
    v.push_back({"E_par",
                 {{"s", 2.0}, {"window", 200.0}},
                 [](const UhpPoint& z, const auto& p, const GridRequest&) {
                   const EisensteinValue e =
                       eisenstein_parabolic(z, get(p, "s"),
                                            get_int(p, "window"));
                   return Sample{e.value, e.tail_estimate};
                 }});
    v.push_back({"E_hyp",
                 {{"s", 3.0}},
                 [](const UhpPoint& z, const auto& p, const GridRequest& r) {
                   const EisensteinValue e = eisenstein_hyperbolic(
                       z, get(p, "s"), standard_fixtures().gamma_21_11,
                       r.budget.group_bound);
                   return Sample{e.value, e.tail_estimate};
                 }});
    v.push_back({"E_ell",
                 {{"s", 3.0}, {"w", I}},
                 [](const UhpPoint& z, const auto& p, const GridRequest& r) {
                   const Complex w = get(p, "w");
                   const auto& fx = standard_fixtures();
                   const bool is_i = std::abs(w - Complex(0.0, 1.0)) < 1e-9;
                   require(is_i || std::abs(w - fx.at_rho.point.as_complex()) <
                                       1e-9,
                           ErrorCode::invalid_argument,
                           "E_ell: 'w' must be a wired cone point");
                   const EisensteinValue e = eisenstein_elliptic(
                       z, get(p, "s"), is_i ? fx.at_i : fx.at_rho,
                       r.budget.group_bound);
                   return Sample{e.value, e.tail_estimate};
                 }});
    v.push_back({"G_s",
                 {{"s", 2.0}, {"w", 1.0 + I}},
                 [](const UhpPoint& z, const auto& p, const GridRequest& r) {
                   const KernelValue g = greens_function(
                       z, get_point(p, "w"), get(p, "s"), r.budget);
                   return Sample{g.value, g.tail_estimate};
                 }});
    v.push_back({"heat_M",
                 {{"t", 1.0}, {"w", 1.0 + I}},
                 [](const UhpPoint& z, const auto& p, const GridRequest& r) {
                   const Complex t = get(p, "t");
                   require(t.imag() == 0.0 && t.real() > 0.0,
                           ErrorCode::invalid_argument,
                           "heat_M: 't' must be a positive real");
                   const KernelValue k = heat_kernel_M(
                       z, get_point(p, "w"), t.real(), r.budget, r.quad);
                   return Sample{k.value, k.tail_estimate};
                 }});
    return v;
  }();
  return defs;
}

const FieldDef& find_field(const std::string& fn) {
  for (const auto& d : fields())
    if (d.fn == fn) return d;
  fail(ErrorCode::invalid_argument, "unknown grid function '" + fn + "'");
}

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::vector<std::string> grid_functions() {
  std::vector<std::string> out;
  for (const auto& d : fields()) out.push_back(d.fn);
  return out;
}

std::string grid_csv(const GridRequest& req) {
  const FieldDef& def = find_field(req.fn);
  require(req.nx >= 1 && req.ny >= 1, ErrorCode::invalid_argument,
          "grid: nx and ny must be >= 1");
  require(req.ymin > 0.0, ErrorCode::invalid_argument,
          "grid: ymin must be positive (upper half-plane)");
  require(req.xmax >= req.xmin && req.ymax >= req.ymin,
          ErrorCode::invalid_argument, "grid: empty rectangle");

  std::map<std::string, Complex> params = def.defaults;
  for (const auto& [k, v] : req.params) {
    require(params.count(k) > 0, ErrorCode::invalid_argument,
            "unknown parameter '" + k + "' for grid function " + req.fn);
    params[k] = v;
  }

  std::ostringstream out;
  out << "# fn=" << req.fn;
  for (const auto& [k, v] : params) {
    out << " " << k << "=" << num(v.real());
    if (v.imag() != 0.0) out << (v.imag() > 0 ? "+" : "") << num(v.imag())
                             << "i";
  }
  out << "\n";
  out << "x,y,re,im,tail_estimate\n";

  const double dx = req.nx > 1 ? (req.xmax - req.xmin) / (req.nx - 1) : 0.0;
  const double dy = req.ny > 1 ? (req.ymax - req.ymin) / (req.ny - 1) : 0.0;
  const double qnan = std::nan("");
  for (int j = 0; j < req.ny; ++j) {
    const double y = req.ymin + j * dy;
    for (int i = 0; i < req.nx; ++i) {
      const double x = req.xmin + i * dx;
      Sample s;
      try {
        s = def.eval(UhpPoint(x, y), params, req);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::invalid_argument) throw;
        s.value = Complex(qnan, qnan);  // singular cell, not a grid failure
        s.tail = qnan;
      }
      out << num(x) << "," << num(y) << "," << num(s.value.real()) << ","
          << num(s.value.imag()) << "," << num(s.tail) << "\n";
    }
  }
  return out.str();
}

}  // namespace wck
