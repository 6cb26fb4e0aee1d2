#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hankel/cli.hpp"
#include "hankel/report_io.hpp"
#include "hankel/verification.hpp"

using namespace hankel;
using Json = nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string temp_path(const std::string& name) {
  return std::string("/tmp/hankel_cli_test_") + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bound: printed special value and derived fallback value") {
  const RunResult printed =
      run_cli({"bound", "--beta", "1", "--t", "0.70710678", "--variant", "printed"});
  CHECK(printed.code == 0);
  const Json jp = Json::parse(printed.out);
  CHECK(near(jp.at("bound").get<double>(), 0.25, 1e-9));

  const RunResult derived = run_cli({"bound", "--beta", "0", "--t", "0.75", "--variant", "derived"});
  CHECK(derived.code == 0);
  const Json jd = Json::parse(derived.out);
  CHECK(near(jd.at("bound").get<double>(), 4.5, 1e-9));
  CHECK(jd.at("case_id").get<std::string>() == "iv");
  CHECK(jd.at("tau0").is_null());
}

TEST_CASE("bound: the breakdown in the payload re-parses") {
  const RunResult r = run_cli({"bound", "--beta", "1", "--t", "0.75"});
  REQUIRE(r.code == 0);
  const BoundBreakdown b = bound_breakdown_from_json(r.out);
  const BoundBreakdown direct = theorem_bound(ClassParams(1.0, 0.75), Variant::derived);
  CHECK(b == direct);
}

TEST_CASE("verify: corollary mismatch cell exits 3 with flags") {
  const RunResult r = run_cli({"verify", "--beta", "1", "--t", "0.75", "--samples", "2000",
                               "--grid", "51", "--tau-grid", "201", "--seed", "7"});
  CHECK(r.code == 3);
  const AuditReport report = audit_report_from_json(r.out);
  bool has_corollary = false;
  for (const auto& f : report.flags) has_corollary = has_corollary || f == kFlagCorollaryMismatch;
  CHECK(has_corollary);
  CHECK(report.seed == 7);
  CHECK(report.sample_count == 2000);
}

TEST_CASE("verify: clean cell exits 0") {
  const RunResult r = run_cli({"verify", "--beta", "0", "--t", "0.6", "--samples", "2000",
                               "--grid", "51", "--tau-grid", "201", "--seed", "7"});
  CHECK(r.code == 0);
}

TEST_CASE("verify: JSON output is byte-identical across runs and round-trips") {
  const std::vector<std::string> args{"verify", "--beta",    "1",  "--t",    "0.75",
                                      "--samples", "2000",   "--grid", "51", "--tau-grid",
                                      "201",    "--seed",    "42"};
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.out == b.out);

  const AuditReport parsed = audit_report_from_json(a.out);
  CHECK(to_json_string(parsed) == a.out);
}

TEST_CASE("verify: seed falls back to HANKEL_AUDIT_SEED") {
  setenv("HANKEL_AUDIT_SEED", "777", 1);
  const RunResult r = run_cli({"verify", "--beta", "0", "--t", "0.6", "--samples", "1000",
                               "--grid", "51", "--tau-grid", "201"});
  unsetenv("HANKEL_AUDIT_SEED");
  const AuditReport report = audit_report_from_json(r.out);
  CHECK(report.seed == 777);
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run_cli({"bound", "--beta", "1"}).code == 2);                      // missing --t
  CHECK(run_cli({"bound", "--beta", "1", "--t", "0.3"}).code == 2);        // t outside range
  CHECK(run_cli({"bound", "--beta", "2", "--t", "0.75"}).code == 2);       // beta outside range
  CHECK(run_cli({"bound", "--beta", "1", "--t", "0.75", "--variant", "x"}).code == 2);
  CHECK(run_cli({"fs"}).code == 2);
  CHECK(run_cli({}).code == 2);
  const RunResult r = run_cli({"bound", "--beta", "1", "--t", "0.3"});
  CHECK(r.err.find("t") != std::string::npos);
}

TEST_CASE("--allow-exterior admits t outside the class range") {
  const RunResult r =
      run_cli({"bound", "--beta", "1", "--t", "0.3", "--allow-exterior"});
  CHECK(r.code == 0);
}

TEST_CASE("range syntax parses endpoints inclusively") {
  const auto pts = cli::parse_range("0:1:5");
  REQUIRE(pts.size() == 5);
  CHECK(pts.front() == 0.0);
  CHECK(pts.back() == 1.0);
  CHECK(near(pts[2], 0.5, 1e-15));
  CHECK(cli::parse_range("0.75").size() == 1);
  CHECK_THROWS_AS(cli::parse_range("0:1:0"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("a:b:3"), std::invalid_argument);
}

TEST_CASE("sweep writes a parseable CSV that round-trips") {
  const std::string path = temp_path("sweep.csv");
  const RunResult r = run_cli({"sweep", "--beta", "0:1:2", "--t", "0.6:0.75:2", "--out", path,
                               "--samples", "500", "--grid", "51", "--tau-grid", "201",
                               "--seed", "3"});
  CHECK(r.code == 3);  // beta = 1 cells disagree with the printed variant
  const std::string text = slurp(path);
  const auto rows = sweep_rows_from_csv(text);
  REQUIRE(rows.size() == 8);  // 4 cells x 2 variants
  CHECK(to_csv(rows) == text);  // 17-digit rendering round-trips exactly
  CHECK(rows[0].variant == "printed");
  CHECK(rows[1].variant == "derived");
  for (const auto& row : rows) {
    if (row.variant == "derived") CHECK(row.numeric_bound <= row.bound + 1e-9);
  }
  std::remove(path.c_str());
}

TEST_CASE("sweep emits JSON when asked") {
  const std::string path = temp_path("sweep.json");
  const RunResult r = run_cli({"sweep", "--beta", "1", "--t", "0.75", "--out", path, "--format",
                               "json", "--samples", "500", "--grid", "51", "--tau-grid", "201",
                               "--seed", "3"});
  CHECK(r.code == 3);
  const Json arr = Json::parse(slurp(path));
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 2);
  CHECK(arr[0].at("variant") == "printed");
  std::remove(path.c_str());
}

TEST_CASE("regions writes the comparison table and signals disagreements") {
  const std::string path = temp_path("regions.csv");
  const RunResult r = run_cli({"regions", "--resolution", "4", "--out", path});
  CHECK(r.code == 3);
  const std::string text = slurp(path);
  std::size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  CHECK(lines == 17);  // header + 4 x 4 cells
  CHECK(text.find("beta,t,delta_printed") == 0);
  std::remove(path.c_str());
}

TEST_CASE("fs: classical-bound mode") {
  const RunResult r = run_cli({"fs", "--mu", "0.5"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(near(j.at("classical_bound").get<double>(), 1.0 + 2.0 * std::exp(-2.0), 1e-12));
}

TEST_CASE("fs: empirical scan mode") {
  const RunResult r = run_cli({"fs", "--beta", "1", "--t", "0.75", "--samples", "400", "--seed",
                               "11", "--mu-grid", "0:1:3"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  REQUIRE(j.at("grid").size() == 3);
  for (const auto& cell : j.at("grid")) {
    CHECK(cell.at("empirical_max").get<double>() >= 0.0);
    CHECK(cell.contains("classical_bound"));
  }
  // a2 = 0 is sampled (forced |p1| = 0 point), so mu = 1 max >= |a3| there
  CHECK(j.at("grid")[1].at("mu").get<double>() == 0.5);
}

TEST_CASE("selfcheck passes and reports errata") {
  const RunResult r = run_cli({"selfcheck", "--samples", "2000"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("all_pass").get<bool>());
  CHECK(!j.at("errata").empty());
}

TEST_CASE("help is help, not an error") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"bound", "--help"}).code == 0);
}
