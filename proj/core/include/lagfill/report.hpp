#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lagfill/cutoff.hpp"

namespace lagfill {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 7;
  CutoffFunction::Variant cutoff = CutoffFunction::Variant::Identity;
  int census_grid = 200;       // census resolution per factor
  int residual_grid = 500;     // immersion residual grid
  int spun_grid = 50;          // spun filling residual grid per factor
  int samples = 10000;         // 1-form residuals, frame agreement, symmetry
  int positivity_samples = 100000;
  int front_samples = 1000;    // rows per knot in fronts.csv
  int detpath_samples = 2000;  // rows in detpath.csv
  double tol_scale = 1.0;      // multiplies every documented tolerance
  double spin_shift = 4.0;
  std::string out_dir = ".";

  void validate() const;  // throws ConfigError
  nlohmann::json to_json() const;
};

struct ClaimResult {
  std::string id;
  std::string statement;
  nlohmann::json computed;
  nlohmann::json expected;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerificationReport {
  int schema_version = 1;
  RunConfig config;
  std::vector<ClaimResult> claims;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

/// Runs the thirteen verification claims in order. Numerical work that a
/// claim fails is reported in its record; unexpected exceptions become
/// failed claims with the message in the note.
VerificationReport run_verification(const RunConfig& config);

/// fronts_K1.svg, fronts_K2.svg and fronts.csv (theta, x, z; the first
/// front_samples rows belong to the first knot, the rest to the second).
void write_front_files(const RunConfig& config);

/// detpath.csv (s, re, im, unwrapped_arg) and detpath.svg with endpoint
/// markers and the imaginary-axis crossing at s = 1/2 annotated.
void write_detpath_files(const RunConfig& config);

void write_report_file(const VerificationReport& report,
                       const std::string& path);

}  // namespace lagfill
