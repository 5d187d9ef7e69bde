// Command line front end: verify the construction, emit the front and
// determinant path figures, or produce everything at once.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "lagfill/emit.hpp"
#include "lagfill/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitConfigError = 2;

void add_common_flags(CLI::App* cmd, lagfill::RunConfig& cfg,
                      std::string& cutoff) {
  cmd->add_option("--n", cfg.n, "cobordism length parameter (default 7)");
  cmd->add_option("--cutoff", cutoff,
                  "cutoff variant: identity | smooth-plateau (default identity)")
      ->check(CLI::IsMember({"identity", "smooth-plateau"}));
  cmd->add_option("--grid", cfg.census_grid,
                  "double point census resolution per factor (default 200)");
  cmd->add_option("--tol", cfg.tol_scale,
                  "multiplier applied to every documented tolerance (default 1)");
  cmd->add_option("--out", cfg.out_dir, "output directory (default .)");
}

int run_verify(const lagfill::RunConfig& cfg, bool json_to_stdout) {
  const lagfill::VerificationReport report = lagfill::run_verification(cfg);
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  lagfill::write_report_file(report,
                             (fs::path(cfg.out_dir) / "report.json").string());
  if (json_to_stdout) {
    std::printf("%s\n", report.to_json().dump(2).c_str());
  } else {
    for (const lagfill::ClaimResult& c : report.claims)
      std::printf("%s %-28s %s\n", c.pass ? "PASS" : "FAIL", c.id.c_str(),
                  c.statement.c_str());
    std::printf("%zu/%zu claims pass\n",
                static_cast<std::size_t>(
                    std::count_if(report.claims.begin(), report.claims.end(),
                                  [](const auto& c) { return c.pass; })),
                report.claims.size());
  }
  return report.all_pass() ? kExitPass : kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of a Legendrian knot cobordism, its "
               "double point surgery and Maslov index accounting"};
  app.require_subcommand(1);

  lagfill::RunConfig cfg;
  std::string cutoff = "identity";
  bool json = false;

  CLI::App* verify = app.add_subcommand(
      "verify", "run every verification claim and write report.json");
  add_common_flags(verify, cfg, cutoff);
  verify->add_flag("--json", json,
                   "print the report as JSON instead of pass/fail lines");

  CLI::App* fronts = app.add_subcommand(
      "fronts", "emit fronts_K1.svg, fronts_K2.svg and fronts.csv");
  add_common_flags(fronts, cfg, cutoff);

  CLI::App* detpath = app.add_subcommand(
      "detpath", "emit detpath.csv and detpath.svg for the determinant path");
  add_common_flags(detpath, cfg, cutoff);

  CLI::App* full = app.add_subcommand(
      "report", "verify and emit all figures and data files");
  add_common_flags(full, cfg, cutoff);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfigError;
  }

  cfg.cutoff = cutoff == "identity"
                   ? lagfill::CutoffFunction::Variant::Identity
                   : lagfill::CutoffFunction::Variant::SmoothPlateau;

  try {
    cfg.validate();
    if (verify->parsed()) return run_verify(cfg, json);
    if (fronts->parsed()) {
      lagfill::write_front_files(cfg);
      return kExitPass;
    }
    if (detpath->parsed()) {
      lagfill::write_detpath_files(cfg);
      return kExitPass;
    }
    if (full->parsed()) {
      lagfill::write_front_files(cfg);
      lagfill::write_detpath_files(cfg);
      return run_verify(cfg, json);
    }
  } catch (const lagfill::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfigError;
  }
  return kExitConfigError;
}
