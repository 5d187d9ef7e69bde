#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "lagfill/emit.hpp"
#include "lagfill/maslov.hpp"
#include "lagfill/report.hpp"

using namespace lagfill;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::size_t count_occurrences(const std::string& text, const std::string& what) {
  std::size_t n = 0, pos = 0;
  while ((pos = text.find(what, pos)) != std::string::npos) {
    ++n;
    pos += what.size();
  }
  return n;
}

std::filesystem::path fresh_dir(const std::string& leaf) {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("lagfill_test_" + leaf);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig ok;
  CHECK_NOTHROW(ok.validate());

  RunConfig bad = ok;
  bad.tol_scale = -1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ok;
  bad.n = 2;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ok;
  bad.census_grid = 100;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ok;
  bad.samples = 10;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = ok;
  bad.out_dir.clear();
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("csv writer formats 17 significant digits") {
  CsvWriter csv({"a", "b"});
  csv.add_row({1.0 / 3.0, 2.0});
  const std::string s = csv.str();
  CHECK(s.find("a,b\n") == 0);
  CHECK(s.find("0.33333333333333331") != std::string::npos);
  CHECK(csv.rows() == 1);
  CHECK_THROWS_AS(csv.add_row({1.0}), std::invalid_argument);
}

TEST_CASE("front files: deterministic, correct row and marker counts") {
  const auto dir = fresh_dir("fronts");
  RunConfig cfg;
  cfg.front_samples = 500;
  cfg.out_dir = dir.string();
  write_front_files(cfg);
  const std::string csv1 = slurp(dir / "fronts.csv");
  const std::string k1svg = slurp(dir / "fronts_K1.svg");
  const std::string k2svg = slurp(dir / "fronts_K2.svg");

  // one header plus front_samples rows per knot
  CHECK(count_occurrences(csv1, "\n") == 1 + 2 * 500);
  CHECK(csv1.rfind("theta,x,z\n", 0) == 0);

  for (const std::string* svg : {&k1svg, &k2svg}) {
    CHECK(count_occurrences(*svg, "<polyline") == 1);
    CHECK(count_occurrences(*svg, "<circle") == 2);  // the two cusps
    CHECK(svg->find("timestamp") == std::string::npos);
  }

  // byte-identical on a second run
  write_front_files(cfg);
  CHECK(slurp(dir / "fronts.csv") == csv1);
  CHECK(slurp(dir / "fronts_K1.svg") == k1svg);
}

TEST_CASE("detpath files: columns, midpoint marker, mirrored endpoints") {
  const auto dir = fresh_dir("detpath");
  RunConfig cfg;
  cfg.detpath_samples = 400;
  cfg.out_dir = dir.string();
  write_detpath_files(cfg);
  const std::string csv = slurp(dir / "detpath.csv");
  const std::string svg = slurp(dir / "detpath.svg");

  CHECK(csv.rfind("s,re,im,unwrapped_arg", 0) == 0);
  CHECK(count_occurrences(svg, "<circle") == 3);
  CHECK(svg.find("s=1/2: 22i/7") != std::string::npos);

  // first and last rows mirror across the imaginary axis
  std::istringstream lines(csv);
  std::string header, first, line, last;
  std::getline(lines, header);
  std::getline(lines, first);
  while (std::getline(lines, line))
    if (!line.empty()) last = line;
  auto parse = [](const std::string& row) {
    std::array<double, 4> v{};
    std::sscanf(row.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]);
    return v;
  };
  const auto a = parse(first), b = parse(last);
  CHECK(a[0] == 0.0);
  CHECK(b[0] == 1.0);
  CHECK(a[1] == doctest::Approx(-b[1]).epsilon(1e-12));
  CHECK(a[2] == doctest::Approx(b[2]).epsilon(1e-12));
  // total unwrapped rotation is phi1
  CHECK(b[3] - a[3] == doctest::Approx(phi1_endpoint_formula()).epsilon(1e-9));

  write_detpath_files(cfg);
  CHECK(slurp(dir / "detpath.csv") == csv);
  CHECK(slurp(dir / "detpath.svg") == svg);
}

TEST_CASE("verification report covers all thirteen claims exactly once") {
  RunConfig cfg;  // defaults
  const VerificationReport report = run_verification(cfg);
  const std::vector<std::string> want = {"legendrian_residuals",
                                         "tangency_time",
                                         "immersion_lagrangian_residual",
                                         "double_point_census",
                                         "self_intersection_sign",
                                         "frame_agreement",
                                         "determinant_path",
                                         "rotation_angle",
                                         "maslov_potential_difference",
                                         "loop_indices",
                                         "spun_filling",
                                         "surface_bookkeeping",
                                         "randomized_properties"};
  REQUIRE(report.claims.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i)
    CHECK(report.claims[i].id == want[i]);
  CHECK(report.all_pass());

  const nlohmann::json j = report.to_json();
  CHECK(j["schema_version"] == 1);
  CHECK(j["all_pass"] == true);
  CHECK(j["claims"].size() == 13);

  // deterministic serialization
  const VerificationReport again = run_verification(cfg);
  CHECK(again.to_json().dump(2) == j.dump(2));
}

TEST_CASE("undersized n fails the pinned census claim") {
  RunConfig cfg;
  cfg.n = 3;
  const VerificationReport report = run_verification(cfg);
  CHECK_FALSE(report.all_pass());
  bool census_failed = false, tangency_failed = false;
  for (const ClaimResult& c : report.claims) {
    if (c.id == "double_point_census" && !c.pass) census_failed = true;
    if (c.id == "tangency_time" && !c.pass) tangency_failed = true;
  }
  CHECK(census_failed);
  CHECK(tangency_failed);
}
