#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "gfw/cli.hpp"
#include "support.hpp"

namespace gfw {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "gfw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("gfw_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

TEST(Cli, GapsOnTheTwoFourCurve) {
  const Result r = run_cli({"gaps", "--k", "2", "--n", "4", "--lambda=-1,2", "--axis", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["output"]["points"][0]["gaps"], Json({1, 2, 3, 5, 7}));
  EXPECT_EQ(j["output"]["points"][0]["weight"], 3);
}

TEST(Cli, PlueckerAndOrbit) {
  const Json p = Json::parse(run_cli({"pluecker", "--k", "5", "--n", "3", "--lambda=-1"}).out);
  EXPECT_EQ(p["output"]["dees"], Json({25, 200, 225, 0}));
  EXPECT_TRUE(p["output"]["totals_match"].get<bool>());
  const Json o = Json::parse(run_cli({"orbit", "--n", "3", "--lambda", "2"}).out);
  EXPECT_EQ(o["output"]["orbit"], Json({{"-1"}, {"1/2"}, {"2"}}));
}

TEST(Cli, WeightTotals) {
  const Json w = Json::parse(run_cli({"weight", "--k", "2", "--n", "4", "--lambda=-1,2"}).out);
  EXPECT_EQ(w["output"]["sum_over_F"], 120);
  EXPECT_EQ(w["output"]["residual_weight"], 0);
  const Json e = Json::parse(run_cli({"weight", "--k", "2", "--n", "4", "--lambda=-1,2", "--mode", "embedded"}).out);
  EXPECT_TRUE(e["output"]["sum_over_F"].is_null());  // Q lacks most fixed points
  const Json z = Json::parse(run_cli({"weight", "--k", "2", "--n", "4", "--lambda=-1,2", "--mode", "embedded",
                                      "--field", "1,0,0,0,-1,0,0,0,1"})
                                 .out);
  EXPECT_EQ(z["output"]["points"].size(), 40u);
  EXPECT_EQ(z["output"]["sum_over_F"], 120);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"frobnicate", "--k", "2", "--n", "4", "--lambda=-1,2"}).code, 2);
  EXPECT_EQ(run_cli({"gaps", "--k", "2", "--n", "4", "--lambda=-1,2/0"}).code, 2);
  EXPECT_EQ(run_cli({"gaps", "--k", "2", "--n", "4", "--lambda=1,2"}).code, 2);
  EXPECT_EQ(run_cli({"gaps", "--k", "2", "--n", "3", "--lambda=2"}).code, 2);
  EXPECT_EQ(run_cli({"gaps", "--k", "2", "--n", "4", "--lambda=-1,2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run_cli({"gaps", "--k", "two"}).code, 2);
  EXPECT_EQ(run_cli({"gaps", "--k", "5", "--n", "3", "--lambda=-1", "--point", "1,1,-t,0"}).code, 2);
  EXPECT_EQ(run_cli({"gaps", "--k", "5", "--n", "3", "--lambda=-1", "--point", "1,1,1,0"}).code, 2);
  const Result small = run_cli({"gaps", "--k", "3", "--n", "3", "--lambda=5", "--truncation", "4", "--axis", "0"});
  EXPECT_EQ(small.code, 2);
  EXPECT_NE(small.err.find("increase truncation"), std::string::npos);
  EXPECT_EQ(run_cli({"info", "--k", "3", "--n", "3", "--lambda=5"}).code, 0);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, Determinism) {
  const std::vector<std::string> args{"strictness", "--k", "3", "--n", "3", "--lambda=-1", "--jobs", "3"};
  const Result a = run_cli(args), b = run_cli(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> sweep{"sweep", "--k", "3", "--n", "3", "--grid", "-3;-2;3;4;5;-1;2", "--jobs", "4"};
  const Result s1 = run_cli(sweep), s2 = run_cli(sweep);
  auto serial = sweep;
  serial.back() = "1";
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_EQ(s1.out, run_cli(serial).out);
}

TEST(Cli, CacheReturnsIdenticalRecords) {
  const auto dir = temp_dir("cache");
  const std::vector<std::string> base{"gaps", "--k", "3", "--n", "3", "--lambda=5"};
  auto cached = base;
  cached.insert(cached.end(), {"--cache-dir", dir.string()});
  const Result fresh = run_cli(base);
  const Result first = run_cli(cached);
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}), 1);
  const Result second = run_cli(cached);
  EXPECT_EQ(fresh.out, first.out);
  EXPECT_EQ(first.out, second.out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SweepCsv) {
  const Result empty = run_cli({"sweep", "--k", "3", "--n", "3"});
  ASSERT_EQ(empty.code, 0) << empty.err;
  EXPECT_EQ(empty.out, "lambda,w,w_hat,equal,flagged_j,consistent,identity_holds,status\n");
  const Result r = run_cli({"sweep", "--k", "5", "--n", "3", "--grid=-1"});
  EXPECT_EQ(r.out.substr(r.out.find('\n') + 1), "-1,574,529,false,0;1;2;3;4,true,true,ok\n");
}

TEST(Cli, CurveFileAndOutput) {
  const auto dir = temp_dir("files");
  {
    std::ofstream f(dir / "curve.json");
    f << R"({"k": 5, "n": 3, "lambda": ["-1"], "field": ["-2", "0", "0", "0", "0", "1"]})";
  }
  const Result r = run_cli({"weight", "--curve", (dir / "curve.json").string(), "--point", "[\"1\", \"1\", \"-t\", \"0\"]",
                            "--out", (dir / "out.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(dir / "out.json");
  const Json j = Json::parse(in);
  EXPECT_EQ(j["output"]["points"][0]["weight"], 574);
  EXPECT_EQ(run_cli({"weight", "--curve", (dir / "curve.json").string(), "--k", "5"}).code, 2);
  {
    std::ofstream f(dir / "bad.json");
    f << R"({"k": 5, "n": 3, "lambda": ["-1"], "colour": 1})";
  }
  EXPECT_EQ(run_cli({"info", "--curve", (dir / "bad.json").string()}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BinaryExitCodes) {
  auto status = [](const std::string& args) {
    const int s = std::system((std::string(GFW_TOOL) + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("info --k 3 --n 3 --lambda 5"), 0);
  EXPECT_EQ(status("info --k 3 --n 3 --lambda 1"), 2);
  EXPECT_EQ(status("nope"), 2);
}

}  // namespace
}  // namespace gfw
