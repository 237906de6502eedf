#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "hestondist/distance.hpp"
#include "hestondist/grushin.hpp"
#include "json.hpp"
#include "report.hpp"

namespace hdist::cli {
namespace {

using std::numbers::pi;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "hestondist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const CliRun r = run(std::move(args));
  EXPECT_EQ(r.code, kOk) << r.err;
  return nlohmann::json::parse(r.out);
}

TEST(Cli, BoundaryDistance) {
  const auto j = run_json({"distance", "heston", "0", "0", "1", "0"});
  EXPECT_EQ(j["value"].get<double>(), heston_distance({0, 0}, {1, 0}).value);
  EXPECT_NEAR(j["value"].get<double>(), 2.0 * std::sqrt(pi), 1e-15);
  EXPECT_EQ(j["regime"], "boundary");
  for (const char* key : {"value", "regime", "parameter", "residual", "iterations"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, VerticalDistance) {
  const auto j = run_json({"distance", "heston", "0", "1", "0", "4"});
  EXPECT_EQ(j["value"].get<double>(), 2.0);
  EXPECT_TRUE(j["parameter"].is_null());
}

TEST(Cli, GrushinOppositeSides) {
  const auto j = run_json({"distance", "grushin", "0", "1", "0", "-1"});
  EXPECT_NEAR(j["value"].get<double>(), 4.0, 1e-14);
}

TEST(Cli, JsonRoundTripsExactly) {
  const auto j = run_json({"distance", "heston", "-1.25", "0.3", "7.5", "2.2", "--method", "c"});
  const DistanceSolution s = heston_distance({-1.25, 0.3}, {7.5, 2.2}, Method::C);
  EXPECT_EQ(j["value"].get<double>(), s.value);
  EXPECT_EQ(j["parameter"].get<double>(), *s.parameter);
  EXPECT_EQ(j["residual"].get<double>(), s.diagnostics.residual);
  EXPECT_EQ(j["iterations"].get<int>(), s.diagnostics.iterations);
}

TEST(Cli, MethodBothReportsGap) {
  const auto j = run_json({"distance", "heston", "0", "1", "10", "4", "--method", "both"});
  EXPECT_EQ(j["regime_c"], "C-far");
  EXPECT_EQ(j["regime_delta"], "delta-close");
  EXPECT_LE(j["relative_gap"].get<double>(), 1e-12);
}

TEST(Cli, Correlated) {
  const auto j = run_json(
      {"distance", "heston-correlated", "0", "1", "1", "2", "--rho", "0.5", "--c", "2"});
  EXPECT_NEAR(j["value"].get<double>(), 0.81715447066512148939, 1e-14);
}

TEST(Cli, Classify) {
  auto j = run_json({"classify", "0", "1", "5", "1"});
  EXPECT_EQ(j["delta_regime"], "delta-close");
  EXPECT_EQ(j["c_regime"], "C-far");
  EXPECT_NEAR(j["delta_threshold"].get<double>(), pi + 2.0, 1e-15);
  EXPECT_EQ(j["c_threshold"].get<double>(), 0.0);
  EXPECT_TRUE(j["in_M"].get<bool>());

  j = run_json({"classify", "0", "1", "6", "1"});
  EXPECT_EQ(j["delta_regime"], "delta-far");
  EXPECT_EQ(j["c_regime"], "C-far");

  j = run_json({"classify", "0", "1", "1", "4"});
  EXPECT_EQ(j["delta_regime"], "delta-close");
  EXPECT_EQ(j["c_regime"], "C-close");
}

TEST(Cli, RateFunction) {
  const auto j = run_json({"rate-fn", "0.3", "1.2", "1.1", "-0.7"});
  EXPECT_EQ(j["lambda_star"].get<double>(), lambda_star(0.3, 1.2, 1.1, -0.7).value);
  EXPECT_EQ(j["branch"], "interior-critical");
  const auto far = run_json({"rate-fn", "0", "0", "1", "0"});
  EXPECT_EQ(far["branch"], "boundary-contribution");
  EXPECT_TRUE(far["delta_star"].is_null());
  EXPECT_NEAR(far["R2"].get<double>(), 2.0 * pi, 1e-15);
}

TEST(Cli, GeodesicCsvFile) {
  const auto path = std::filesystem::temp_directory_path() / "hestondist_arch.csv";
  const CliRun r = run({"geodesic", "0", "0", "1", "0", "--samples", "101", "--out", path.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::ifstream in(path);
  std::string line;
  std::vector<std::pair<double, double>> rows;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) {
      EXPECT_FALSE(header_seen);
      continue;
    }
    if (!header_seen) {
      EXPECT_EQ(line, "x,v");
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  std::filesystem::remove(path);
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_NEAR(rows[50].second, 1.0 / pi, 1e-15);
  for (int i = 0; i < 50; ++i) EXPECT_NEAR(rows[i].second, rows[100 - i].second, 1e-14);
}

TEST(Cli, GeodesicVertical) {
  const CliRun r = run({"geodesic", "1", "1", "1", "9", "--samples", "3"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("x,v\n1,1\n1,4\n1,9\n"), std::string::npos) << r.out;
}

TEST(Cli, ValidateFixedOnly) {
  const auto j = run_json({"validate", "--n-random", "0"});
  EXPECT_TRUE(j["passed"].get<bool>());
  ASSERT_EQ(j["suites"].size(), 3u);
  EXPECT_EQ(j["suites"][0]["suite"], "worked_examples");
}

TEST(Cli, LdpSim) {
  const auto j = run_json({"ldp-sim", "--start", "0", "1", "--ball", "0", "1.5", "0.1",
                           "--t-grid", "0.4,0.2", "--n-paths", "20000", "--steps", "50"});
  EXPECT_NEAR(j["inf_lambda_star"].get<double>(), 0.32, 1e-6);
  EXPECT_TRUE(j["ball_inside_M"].get<bool>());
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][1]["t"].get<double>(), 0.2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"distance", "heston", "0", "-1", "1", "1"}).code, kDomainError);
  EXPECT_EQ(run({"distance", "grushin", "0", "1", "10", "-1"}).code, kDomainError);
  EXPECT_EQ(run({"distance", "heston", "0", "1", "1"}).code, kDomainError);
  EXPECT_EQ(run({"distance", "bogus", "0", "1", "1", "1"}).code, kDomainError);
  EXPECT_EQ(run({"distance", "heston", "0", "1", "x", "1"}).code, kDomainError);
  EXPECT_EQ(run({"geodesic", "0", "1", "1", "1", "--samples", "1"}).code, kDomainError);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(Cli, HumanFormatNineDigits) {
  const CliRun r = run({"distance", "heston", "0", "0", "1", "0"});
  EXPECT_NE(r.out.find("3.5449077\n"), std::string::npos) << r.out;
}

TEST(Report, FormatDouble) {
  EXPECT_EQ(format_double(0.1, 17), "0.10000000000000001");
  EXPECT_EQ(format_double(2.0, 17), "2");
  EXPECT_EQ(format_double(std::sqrt(2.0), 9), "1.41421356");
  EXPECT_EQ(format_double(INFINITY, 17), "inf");
}

TEST(Report, JsonNullForNonFinite) {
  Record r;
  r.set("a", std::nan("")).set("b", 1.5).set("c", std::optional<double>{});
  std::ostringstream out;
  write_json(out, r);
  EXPECT_EQ(out.str(), "{\"a\":null,\"b\":1.5,\"c\":null}\n");
}

TEST(Report, CsvWithoutTable) {
  Record r;
  r.set("name", "x\"y").set("n", 3);
  std::ostringstream out;
  write_csv(out, r);
  EXPECT_EQ(out.str(), "name,n\nx\"y,3\n");
}

}  // namespace
}  // namespace hdist::cli
