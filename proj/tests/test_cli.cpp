#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "xns/cache.hpp"
#include "xns/cli.hpp"
#include "xns/errors.hpp"
#include "xns/report.hpp"

using namespace xns;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("xns-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::vector<char*> argv;
  args.insert(args.begin(), "xns-bound");
  for (auto& a : args) argv.push_back(a.data());
  testing::internal::CaptureStdout();
  testing::internal::CaptureStderr();
  int code = cli_main(static_cast<int>(argv.size()), argv.data());
  std::string o = testing::internal::GetCapturedStdout();
  testing::internal::GetCapturedStderr();
  if (out) *out = o;
  return code;
}

}  // namespace

TEST(DefaultD, SmallestDivisorAtLeastThree) {
  EXPECT_EQ(default_d(7), 3);
  EXPECT_EQ(default_d(13), 3);
  EXPECT_EQ(default_d(11), 5);
  EXPECT_EQ(default_d(17), 4);
  EXPECT_THROW(default_d(8), BadLevel);
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(run_cli({"run", "--p", "8"}), kExitConfig);
  EXPECT_EQ(run_cli({"run", "--p", "7", "--d", "2"}), kExitConfig);
  EXPECT_EQ(run_cli({"run", "--p", "7", "--mode", "fast"}), kExitConfig);
  EXPECT_EQ(run_cli({"run", "--p", "7", "--precision", "64", "--precision-cap", "64"}), kExitOk);
  EXPECT_EQ(run_cli({"verify", "--p", "7", "--verify", "bogus"}), kExitConfig);
}

TEST(Run, DefaultDAndWorstCaseExample) {
  std::string out;
  ASSERT_EQ(run_cli({"run", "--p", "7", "--mode", "paper-worst-case"}, &out), kExitOk);
  json j = json::parse(out);
  EXPECT_EQ(j["context"]["d"], 3);
  BoundReport r = report_from_json(j);
  EXPECT_TRUE(certify_leq(r.bound_log_j, RealInterval::from_strings("1.3e31", "1.3e31", 128)));
  EXPECT_TRUE(certify_leq(r.bound_log_j, r.theorem1));
  for (const char* key : {"context", "assumptions", "pipeline", "bounds", "anchors", "timings"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["timings"].empty());
}

TEST(Run, TextFormatAndOutputFile) {
  fs::path dir = scratch_dir("text");
  fs::path file = dir / "report.txt";
  ASSERT_EQ(run_cli({"run", "--p", "7", "--format", "text", "--output", file.string()}), kExitOk);
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("bound log|j|"), std::string::npos);
  EXPECT_EQ(ss.str().find("FAIL"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Report, JsonRoundTrip) {
  PipelineConfig cfg;
  cfg.p = 11;
  cfg.d = 5;
  BoundReport r = run_pipeline(cfg);
  json j = report_to_json(r);
  BoundReport back = report_from_json(j);
  EXPECT_EQ(report_to_json(back).dump(), j.dump());
  EXPECT_TRUE(back.bound_log_j == r.bound_log_j);
  EXPECT_EQ(back.checks.size(), r.checks.size());
  EXPECT_THROW(report_from_json(json::parse(R"({"context": 3})")), ConfigError);
}

TEST(Report, ByteIdenticalReruns) {
  std::string a, b;
  ASSERT_EQ(run_cli({"run", "--p", "13", "--d", "3"}, &a), kExitOk);
  ASSERT_EQ(run_cli({"run", "--p", "13", "--d", "3"}, &b), kExitOk);
  EXPECT_EQ(a, b);
}

TEST(Cache, StoredEqualsFresh) {
  fs::path dir = scratch_dir("cache");
  CartanContext ctx = build_context(13, 6);
  PrecisionPolicy policy{128, 4096};
  UnitSystem fresh = build_unit_system(ctx, policy);
  UnitSystem first = cached_unit_system(ctx, policy, dir);
  EXPECT_TRUE(fs::exists(cache_path(dir, 13, 6, 128)));
  std::optional<UnitSystem> loaded = load_unit_system(dir, ctx, 128);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(unit_system_to_json(*loaded).dump(), unit_system_to_json(fresh).dump());
  EXPECT_EQ(unit_system_to_json(first).dump(), unit_system_to_json(fresh).dump());
  // A corrupt file is a miss, not an error.
  std::ofstream(cache_path(dir, 13, 6, 128)) << "{ not json";
  EXPECT_FALSE(load_unit_system(dir, ctx, 128).has_value());
  fs::remove_all(dir);
}

TEST(Cache, PipelineResultUnchangedByCache) {
  fs::path dir = scratch_dir("pipeline");
  PipelineConfig cfg;
  cfg.p = 13;
  cfg.d = 3;
  std::string plain = report_to_json(run_pipeline(cfg)).dump();
  cfg.cache_dir = dir;
  std::string cold = report_to_json(run_pipeline(cfg)).dump();
  std::string warm = report_to_json(run_pipeline(cfg)).dump();
  EXPECT_EQ(plain, cold);
  EXPECT_EQ(plain, warm);
  fs::remove_all(dir);
}

TEST(Verify, SpecExamples) {
  std::string out;
  ASSERT_EQ(run_cli({"verify", "--p", "7", "--verify", "product-identity"}, &out), kExitOk);
  json j = json::parse(out);
  EXPECT_TRUE(j["pass"].get<bool>());
  ASSERT_EQ(run_cli({"verify", "--p", "11", "--verify", "orbits"}, &out), kExitOk);
  j = json::parse(out);
  int orbit_lines = 0;
  for (const auto& c : j["checks"])
    if (c["name"].get<std::string>().rfind("|O_", 0) == 0) {
      ++orbit_lines;
      EXPECT_EQ(c["value"], "24");
    }
  EXPECT_EQ(orbit_lines, 5);
  ASSERT_EQ(run_cli({"verify", "--p", "7", "--verify", "lambda-bounds"}, &out), kExitOk);
  for (const auto& c : json::parse(out)["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Verify, AllSuitesText) {
  std::string out;
  ASSERT_EQ(run_cli({"verify", "--p", "7", "--format", "text", "--timings"}, &out), kExitOk);
  EXPECT_EQ(out.find("FAIL"), std::string::npos);
  for (const auto& s : verify_suite_names()) EXPECT_NE(out.find("time " + s), std::string::npos) << s;
}
