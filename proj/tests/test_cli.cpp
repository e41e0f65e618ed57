#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "support/fixtures.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CHEEGER_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
  const int status = pclose(pipe);
  res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string fixture(const std::string& name) { return test_support::fixture_path(name).string(); }

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(Cli, SolveSquare) {
  const RunResult r = run("solve --input " + fixture("square"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["h"].get<double>(), 3.7724539, 1e-7);
  EXPECT_EQ(j["method"], "convex-exact");
  EXPECT_EQ(j["neck_check"]["verdict"], "pass");
  EXPECT_EQ(j["tool"], "cheeger");
  for (const char* key : {"r", "bracket", "residual", "retract_area", "steiner_check", "area_lower_bound_ok",
                          "config", "version", "assumptions", "iterations"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, SolveIsByteIdentical) {
  const RunResult a = run("solve --input " + fixture("k2") + " --resolution 128");
  const RunResult b = run("solve --input " + fixture("k2") + " --resolution 128");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, SolveHeartReportsNeck) {
  const std::string cmd = std::string(CHEEGER_CLI_PATH) + " solve --input " + fixture("heart") + " 2>&1 >/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string err;
  std::array<char, 512> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) err.append(buf.data(), n);
  const int status = pclose(pipe);
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_NE(err.find("radius"), std::string::npos);
}

TEST(Cli, SolveMalformedInput) {
  const auto path = temp_file("cheeger_cli_malformed.json");
  std::ofstream(path) << "{\"vertices\": [[0, 0], [1, 0]";
  EXPECT_EQ(run("solve --input " + path.string()).code, 1);
  std::ofstream(path) << "{\"vertices\": [[0, 0], [1, 1], [1, 0], [0, 1]]}";
  EXPECT_EQ(run("solve --input " + path.string()).code, 1);
  std::filesystem::remove(path);
  EXPECT_EQ(run("solve --input /nonexistent/poly.json").code, 1);
  EXPECT_EQ(run("solve").code, 1);
  EXPECT_EQ(run("solve --input " + fixture("square") + " --resolution 8").code, 1);
}

TEST(Cli, KochSteps) {
  const RunResult two = run("koch --n 2");
  ASSERT_EQ(two.code, 0);
  EXPECT_NEAR(nlohmann::json::parse(two.out)["h"].get<double>(), 1.8912688715, 1e-10);
  const RunResult five = run("koch --n 5");
  ASSERT_EQ(five.code, 0);
  const auto j = nlohmann::json::parse(five.out);
  EXPECT_NEAR(j["r"].get<double>(), 0.528751827, 1e-9);
  EXPECT_LE(j["tail_bound"].get<double>(), 2.71e-6);
  EXPECT_EQ(run("koch --n 13").code, 1);
  EXPECT_EQ(run("koch --n 0").code, 1);
}

TEST(Cli, KochTable) {
  const RunResult r = run("koch --n 8 --table");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("h(K) interval"), std::string::npos);
  EXPECT_NE(r.out.find("[1.89124548"), std::string::npos);
}

TEST(Cli, NecksK5) {
  const RunResult r = run("necks --input " + fixture("k5"));
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["neck_check"]["verdict"], "pass");
  EXPECT_EQ(j["neck_check"]["radii"].size(), 33u);
}

TEST(Cli, NecksHeart) { EXPECT_EQ(run("necks --input " + fixture("heart")).code, 2); }

TEST(Cli, RenderDeterministic) {
  const auto a = temp_file("cheeger_cli_a.svg");
  const auto b = temp_file("cheeger_cli_b.svg");
  ASSERT_EQ(run("render --input " + fixture("square") + " --out " + a.string()).code, 0);
  ASSERT_EQ(run("render --input " + fixture("square") + " --out " + b.string()).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a).find("id=\"cheeger-set\""), std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  EXPECT_EQ(run("render --input " + fixture("square") + " --out /nonexistent-dir/x.svg").code, 1);
}

#ifdef CHEEGER_HAS_ORACLE
TEST(Cli, OracleSquare) {
  const RunResult r = run("oracle --input " + fixture("square") + " --grid 128");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["h_approx"].get<double>() / 3.7724539, 1.0, 0.03);
  EXPECT_EQ(j["resolution"], 128);
  EXPECT_EQ(run("oracle --input " + fixture("square") + " --grid 32").code, 1);
}
#else
TEST(Cli, OracleUnavailable) {
  EXPECT_EQ(run("oracle --input " + fixture("square") + " --grid 256").code, 1);
}
#endif
