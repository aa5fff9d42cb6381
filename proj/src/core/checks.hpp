#pragma once

#include <map>
#include <string>
#include <vector>

#include "core/kernels.hpp"
#include "core/quadrature.hpp"
#include "core/util.hpp"

// Named identity checks. Each check evaluates both sides of one identity
// with explicit truncation budgets and reports a relative residual together
// with every truncation-tail estimate that does not cancel between the two
// sides.
namespace wck {

struct CheckSpec {
  std::string check_id;
  std::map<std::string, Complex> params;
  TruncationBudget budget;
  QuadratureConfig quad;
  double tolerance = 0.0;  // > 0 required at run time
};

enum class Verdict { pass, fail, inconclusive };

// Verdict rule (recomputable from the fields below):
//   scale    = max(|lhs|, |rhs|, 1e-300)
//   residual = |lhs - rhs| / scale          (unless the check defines it)
//   net      = tail_estimates["net"]        (total non-cancelling tail)
//   pass          <=> residual <= tolerance and net/scale <= tolerance
//   inconclusive  <=> residual <= tolerance and net/scale >  tolerance
//   fail          <=> residual >  tolerance (or the check could not run)
struct CheckReport {
  std::string check_id;
  std::map<std::string, Complex> params;
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double residual = 0.0;
  std::map<std::string, double> tail_estimates;
  double elapsed_seconds = 0.0;  // informational; excluded from determinism
  Verdict verdict = Verdict::fail;
  double tolerance = 0.0;  // echo of the spec
};

struct CheckInfo {
  std::string id;
  std::string summary;
};

// Registry dump, stable order.
std::vector<CheckInfo> check_registry();

// Spec pre-filled with the check's default parameters, budget, quadrature
// settings and tolerance. Throws ErrorCode::invalid_argument for unknown ids.
CheckSpec default_spec(const std::string& check_id);

// Runs one check. Unknown ids or parameters throw invalid_argument;
// evaluation errors inside the identity produce verdict fail with an
// infinite residual rather than throwing.
CheckReport run_check(const CheckSpec& spec);

// key=value mutation shared by --set and the config parser. Reserved keys
// (tolerance, group_bound, series_kmax, tail_tolerance, tail_policy,
// abs_tol, rel_tol, max_panels, panel_order) hit the corresponding spec
// field; anything else must name a parameter of the check and parses as a
// complex literal ("2", "-1.5", "0.25i", "1+2i", "1e-3").
void apply_setting(CheckSpec& spec, const std::string& key,
                   const std::string& value);

// Plain-text config: "[check <id>]" section headers followed by key=value
// lines; '#' starts a comment. Returns one spec per section.
std::vector<CheckSpec> parse_config_text(const std::string& text);

// {version, specs, reports} as a JSON document.
std::string reports_to_json(const std::vector<CheckSpec>& specs,
                            const std::vector<CheckReport>& reports);

Complex parse_complex_literal(const std::string& text);

const char* verdict_name(Verdict v);

}  // namespace wck
