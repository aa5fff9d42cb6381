// Command-line front end. Talks to the library exclusively through the C
// interface so it doubles as a smoke test of that surface.
//
// Exit codes: 0 all checks passed, 1 at least one failed, 2 none failed but
// at least one inconclusive, 3 usage or configuration error.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavecheck.h"

namespace {

constexpr int kUsageError = 3;

struct KeyValues {
  std::vector<std::string> keys, values;
  std::vector<const char*> key_ptrs, value_ptrs;

  bool add(const std::string& setting) {
    const auto eq = setting.find('=');
    if (eq == std::string::npos || eq == 0) return false;
    keys.push_back(setting.substr(0, eq));
    values.push_back(setting.substr(eq + 1));
    return true;
  }
  void finalize() {
    for (const auto& k : keys) key_ptrs.push_back(k.c_str());
    for (const auto& v : values) value_ptrs.push_back(v.c_str());
  }
  size_t size() const { return keys.size(); }
  const char* const* k() const {
    return key_ptrs.empty() ? nullptr : key_ptrs.data();
  }
  const char* const* v() const {
    return value_ptrs.empty() ? nullptr : value_ptrs.data();
  }
};

int report_api_error(const char* what) {
  std::fprintf(stderr, "verify: %s: %s\n", what, wck_last_error());
  return kUsageError;
}

int print_owned(char* text) {
  if (!text) {
    std::fprintf(stderr, "verify: out of memory\n");
    return kUsageError;
  }
  std::fputs(text, stdout);
  wck_string_free(text);
  return 0;
}

int cmd_list() {
  char* json = nullptr;
  if (wck_registry_json(&json) != WCK_OK) return report_api_error("list");
  return print_owned(json);
}

int cmd_run(const std::string& config_path, const std::string& check_id,
            const std::vector<std::string>& sets) {
  const bool have_config = !config_path.empty();
  const bool have_check = !check_id.empty();
  if (have_config == have_check) {
    std::fprintf(stderr,
                 "verify: run needs exactly one of --config or --check\n");
    return kUsageError;
  }
  if (have_config && !sets.empty()) {
    std::fprintf(stderr, "verify: --set requires --check\n");
    return kUsageError;
  }

  char* json = nullptr;
  int outcome = 0;
  if (have_config) {
    std::ifstream in(config_path);
    if (!in) {
      std::fprintf(stderr, "verify: cannot open config '%s'\n",
                   config_path.c_str());
      return kUsageError;
    }
    std::ostringstream text;
    text << in.rdbuf();
    if (wck_run_config_text(text.str().c_str(), &json, &outcome) != WCK_OK)
      return report_api_error("run");
  } else {
    KeyValues kv;
    for (const auto& s : sets) {
      if (!kv.add(s)) {
        std::fprintf(stderr, "verify: malformed --set '%s' (want key=value)\n",
                     s.c_str());
        return kUsageError;
      }
    }
    kv.finalize();
    if (wck_run_single(check_id.c_str(), kv.k(), kv.v(), kv.size(), &json,
                       &outcome) != WCK_OK)
      return report_api_error("run");
  }
  const int rc = print_owned(json);
  return rc != 0 ? rc : outcome;
}

int cmd_grid(const std::string& fn, double xmin, double xmax, double ymin,
             double ymax, int nx, int ny, const std::vector<std::string>& sets,
             const std::string& out_path) {
  KeyValues kv;
  for (const auto& s : sets) {
    if (!kv.add(s)) {
      std::fprintf(stderr, "verify: malformed --set '%s' (want key=value)\n",
                   s.c_str());
      return kUsageError;
    }
  }
  kv.finalize();
  char* csv = nullptr;
  if (wck_grid_csv(fn.c_str(), xmin, xmax, ymin, ymax, nx, ny, kv.k(), kv.v(),
                   kv.size(), &csv) != WCK_OK)
    return report_api_error("grid");
  std::ofstream out(out_path);
  if (!out) {
    std::fprintf(stderr, "verify: cannot write '%s'\n", out_path.c_str());
    wck_string_free(csv);
    return kUsageError;
  }
  out << csv;
  wck_string_free(csv);
  if (!out.good()) {
    std::fprintf(stderr, "verify: short write to '%s'\n", out_path.c_str());
    return kUsageError;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical identity checks for automorphic kernel sums"};
  app.require_subcommand(1);

  std::string config_path, check_id;
  std::vector<std::string> run_sets;
  auto* run = app.add_subcommand("run", "run checks and print a JSON report");
  run->add_option("--config", config_path, "config file of [check <id>] sections");
  run->add_option("--check", check_id, "single check id");
  run->add_option("--set", run_sets, "key=value override (repeatable)");

  std::string fn, out_path;
  double xmin = -0.5, xmax = 0.5, ymin = 0.5, ymax = 2.0;
  int nx = 16, ny = 16;
  std::vector<std::string> grid_sets;
  auto* grid = app.add_subcommand("grid", "sample a field over a rectangle");
  grid->add_option("--fn", fn, "field id (see `verify list`)")->required();
  grid->add_option("--xmin", xmin)->required();
  grid->add_option("--xmax", xmax)->required();
  grid->add_option("--ymin", ymin)->required();
  grid->add_option("--ymax", ymax)->required();
  grid->add_option("--nx", nx)->required();
  grid->add_option("--ny", ny)->required();
  grid->add_option("--out", out_path, "output CSV path")->required();
  grid->add_option("--set", grid_sets, "key=value parameter (repeatable)");

  auto* list = app.add_subcommand("list", "print the check registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (list->parsed()) return cmd_list();
  if (run->parsed()) return cmd_run(config_path, check_id, run_sets);
  if (grid->parsed())
    return cmd_grid(fn, xmin, xmax, ymin, ymax, nx, ny, grid_sets, out_path);
  return kUsageError;
}
