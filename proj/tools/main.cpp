// Command-line surface over the verification suite: one subcommand per
// topic, a composite `verify`, and cache maintenance. Reports go to stdout
// as a text table and optionally to a JSON file; JSON output is
// deterministic for a fixed configuration.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vlplus/cache.hpp"
#include "vlplus/checks.hpp"

namespace {

using vlplus::checks::CheckResult;

struct RunConfig {
  std::string lattice;  // sqrt2e8 | bw16 | leech (subcommand-dependent)
  int order = 3;        // truncation order in q for the heavy identities
  int threads = 1;
  std::string json_path;
  std::string cache_dir;
  std::uint64_t max_vectors = (1ull << 33);
};

vlplus::checks::Options to_options(const RunConfig& cfg) {
  vlplus::checks::Options opt;
  opt.ld1_order2 = 2 * cfg.order;
  opt.budget.max_nodes = cfg.max_vectors;
  opt.threads = cfg.threads;
  if (!cfg.cache_dir.empty())
    opt.cache = std::filesystem::path(cfg.cache_dir);
  else
    opt.cache = vlplus::cache::default_dir();
  return opt;
}

void print_results(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    std::printf("%-14s %-28s %-18s %6.1fs\n", r.id.c_str(), r.name.c_str(),
                r.status.c_str(), r.seconds);
    std::printf("  computed: %s\n  expected: %s\n", r.computed.c_str(),
                r.expected.c_str());
  }
}

int write_json(const std::string& path, const std::string& command,
               const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results)
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"status", r.status},
                      {"computed", r.computed},
                      {"expected", r.expected}});
  nlohmann::json j{{"artifact_version", 1},
                   {"command", command},
                   {"checks", checks}};
  std::ofstream out(path);
  out << j.dump(2) << "\n";
  if (!out) {
    std::cerr << "error: cannot write report to " << path << "\n";
    return 3;
  }
  return 0;
}

int exit_code(const std::vector<CheckResult>& results) {
  bool any_fail = false, any_skip = false;
  for (const auto& r : results) {
    if (r.status == "fail") any_fail = true;
    if (r.status != "pass" && r.status != "fail") any_skip = true;
  }
  if (any_fail) return 1;
  if (any_skip) return 2;
  return 0;
}

int finish(const RunConfig& cfg, const std::string& command,
           const std::vector<CheckResult>& results) {
  print_results(results);
  if (!cfg.json_path.empty()) {
    int rc = write_json(cfg.json_path, command, results);
    if (rc != 0) return rc;
  }
  return exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for the lattice fixed-point algebra "
               "classification"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--order", cfg.order,
                 "truncation order in powers of q for the series identities")
      ->check(CLI::Range(1, 12));
  app.add_option("--threads", cfg.threads, "worker thread count")
      ->check(CLI::Range(1, 64));
  app.add_option("--json", cfg.json_path, "write the JSON report here");
  app.add_option("--cache", cfg.cache_dir,
                 "theta cache directory (default: VLPLUS_CACHE_DIR or a "
                 "temporary directory)");
  app.add_option("--max-vectors", cfg.max_vectors,
                 "enumeration node ceiling; exceeding it marks the check "
                 "skipped(resource)");

  auto* golay = app.add_subcommand("golay", "binary Golay code checks");
  auto* leechlab =
      app.add_subcommand("leechlab", "Leech lattice, sublattice chain and "
                         "octad split checks");
  auto* qspace = app.add_subcommand("qspace", "quadratic space checks");
  auto* voamod = app.add_subcommand("voamod", "module label and character "
                                   "checks");
  auto* classify = app.add_subcommand("classify", "census and overlattice "
                                      "checks");
  classify->add_option("--lattice", cfg.lattice,
                       "restrict to one lattice side")
      ->check(CLI::IsMember({"sqrt2e8", "bw16"}));
  auto* verify = app.add_subcommand("verify", "composite verification run");
  std::string scope = "all";
  verify->add_option("scope", scope, "all or one subcommand name")
      ->check(CLI::IsMember(
          {"all", "golay", "leechlab", "qspace", "voamod", "classify"}));
  auto* gc = app.add_subcommand("cache-gc", "drop stale-version cache entries");
  for (auto* sc : {golay, leechlab, qspace, voamod, classify, verify, gc})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  vlplus::checks::Options opt = to_options(cfg);
  try {
    if (gc->parsed()) {
      std::filesystem::path dir = cfg.cache_dir.empty()
                                      ? vlplus::cache::default_dir()
                                      : std::filesystem::path(cfg.cache_dir);
      if (!std::filesystem::is_directory(dir)) {
        std::cerr << "error: cache directory does not exist: " << dir << "\n";
        return 3;
      }
      auto res = vlplus::cache::cache_gc(dir);
      for (const auto& f : res.unreadable)
        std::cerr << "warning: unreadable cache entry kept: " << f << "\n";
      std::cout << "freed " << res.freed_bytes << " bytes ("
                << res.removed << " entries)\n";
      return 0;
    }
    std::vector<CheckResult> results;
    std::string command;
    if (golay->parsed()) {
      command = "golay";
      results = vlplus::checks::run_golay(opt);
    } else if (leechlab->parsed()) {
      command = "leechlab";
      results = vlplus::checks::run_leechlab(opt);
    } else if (qspace->parsed()) {
      command = "qspace";
      results = vlplus::checks::run_qspace(opt);
    } else if (voamod->parsed()) {
      command = "voamod";
      results = vlplus::checks::run_voamod(opt);
    } else if (classify->parsed()) {
      command = "classify";
      if (cfg.lattice.empty())
        results = vlplus::checks::run_classify(opt);
      else
        results = {vlplus::checks::check_census_side(opt, cfg.lattice)};
    } else if (verify->parsed()) {
      command = "verify " + scope;
      if (scope == "all")
        results = vlplus::checks::run_all(opt);
      else if (scope == "golay")
        results = vlplus::checks::run_golay(opt);
      else if (scope == "leechlab")
        results = vlplus::checks::run_leechlab(opt);
      else if (scope == "qspace")
        results = vlplus::checks::run_qspace(opt);
      else if (scope == "voamod")
        results = vlplus::checks::run_voamod(opt);
      else
        results = vlplus::checks::run_classify(opt);
    }
    return finish(cfg, command, results);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
