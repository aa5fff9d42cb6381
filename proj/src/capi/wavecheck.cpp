#include "wavecheck.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "core/checks.hpp"
#include "core/grid.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wck_status status_of(wck::ErrorCode code) {
  using wck::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return WCK_INVALID_ARGUMENT;
    case ErrorCode::domain: return WCK_DOMAIN;
    case ErrorCode::divergence: return WCK_DIVERGENCE;
    case ErrorCode::singularity: return WCK_SINGULARITY;
    case ErrorCode::pole: return WCK_POLE;
    case ErrorCode::resource: return WCK_RESOURCE;
    case ErrorCode::convergence: return WCK_CONVERGENCE;
  }
  return WCK_INTERNAL;
}

int outcome_of(const std::vector<wck::CheckReport>& reports) {
  bool any_fail = false, any_inconclusive = false;
  for (const auto& r : reports) {
    if (r.verdict == wck::Verdict::fail) any_fail = true;
    if (r.verdict == wck::Verdict::inconclusive) any_inconclusive = true;
  }
  if (any_fail) return WCK_ANY_FAIL;
  if (any_inconclusive) return WCK_ANY_INCONCLUSIVE;
  return WCK_ALL_PASS;
}

template <class Fn>
wck_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return WCK_OK;
  } catch (const wck::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WCK_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return WCK_INTERNAL;
  }
}

wck_status require_args(bool ok, const char* message) {
  if (ok) return WCK_OK;
  g_last_error = message;
  return WCK_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* wck_version(void) { return "1.0.0"; }

const char* wck_last_error(void) { return g_last_error.c_str(); }

void wck_string_free(char* s) { std::free(s); }

wck_status wck_registry_json(char** out_json) {
  if (require_args(out_json != nullptr, "out_json is null") != WCK_OK)
    return WCK_INVALID_ARGUMENT;
  return guarded([&] {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& info : wck::check_registry())
      doc.push_back({{"id", info.id}, {"summary", info.summary}});
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

wck_status wck_run_config_text(const char* config_text, char** out_json,
                               int* out_outcome) {
  if (require_args(config_text && out_json, "null argument") != WCK_OK)
    return WCK_INVALID_ARGUMENT;
  return guarded([&] {
    const auto specs = wck::parse_config_text(config_text);
    wck::require(!specs.empty(), wck::ErrorCode::invalid_argument,
                 "config defines no checks");
    std::vector<wck::CheckReport> reports;
    reports.reserve(specs.size());
    for (const auto& spec : specs) reports.push_back(wck::run_check(spec));
    *out_json = dup_string(wck::reports_to_json(specs, reports));
    if (out_outcome) *out_outcome = outcome_of(reports);
  });
}

wck_status wck_run_single(const char* check_id, const char* const* keys,
                          const char* const* values, size_t n,
                          char** out_json, int* out_outcome) {
  if (require_args(check_id && out_json && (n == 0 || (keys && values)),
                   "null argument") != WCK_OK)
    return WCK_INVALID_ARGUMENT;
  return guarded([&] {
    wck::CheckSpec spec = wck::default_spec(check_id);
    for (size_t i = 0; i < n; ++i) {
      wck::require(keys[i] && values[i], wck::ErrorCode::invalid_argument,
                   "null key or value");
      wck::apply_setting(spec, keys[i], values[i]);
    }
    std::vector<wck::CheckReport> reports{wck::run_check(spec)};
    *out_json = dup_string(wck::reports_to_json({spec}, reports));
    if (out_outcome) *out_outcome = outcome_of(reports);
  });
}

wck_status wck_grid_csv(const char* fn, double xmin, double xmax, double ymin,
                        double ymax, int nx, int ny, const char* const* keys,
                        const char* const* values, size_t n, char** out_csv) {
  if (require_args(fn && out_csv && (n == 0 || (keys && values)),
                   "null argument") != WCK_OK)
    return WCK_INVALID_ARGUMENT;
  return guarded([&] {
    wck::GridRequest req;
    req.fn = fn;
    req.xmin = xmin;
    req.xmax = xmax;
    req.ymin = ymin;
    req.ymax = ymax;
    req.nx = nx;
    req.ny = ny;
    for (size_t i = 0; i < n; ++i) {
      wck::require(keys[i] && values[i], wck::ErrorCode::invalid_argument,
                   "null key or value");
      const std::string key = keys[i];
      const std::string value = values[i];
      const wck::Complex parsed = wck::parse_complex_literal(value);
      auto real_of = [&]() {
        wck::require(parsed.imag() == 0.0, wck::ErrorCode::invalid_argument,
                     "'" + key + "' must be real");
        return parsed.real();
      };
      if (key == "group_bound") req.budget.group_bound = real_of();
      else if (key == "series_kmax") req.budget.series_kmax = int(real_of());
      else if (key == "abs_tol") req.quad.abs_tol = real_of();
      else if (key == "rel_tol") req.quad.rel_tol = real_of();
      else if (key == "max_panels") req.quad.max_panels = int(real_of());
      else if (key == "panel_order") req.quad.panel_order = int(real_of());
      else req.params[key] = parsed;
    }
    *out_csv = dup_string(wck::grid_csv(req));
  });
}

}  // extern "C"
