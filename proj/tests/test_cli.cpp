#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(PSLGCOUNT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("pslgcount_cli_" + name)).string();
}

nlohmann::json results_of(const std::string& args) {
  auto r = run("--json " + args);
  EXPECT_EQ(r.code, 0) << args;
  auto j = nlohmann::json::parse(r.out);
  return j["results"];
}

}  // namespace

TEST(Cli, GenerateAndCount) {
  auto fan = temp_path("fan.json");
  ASSERT_EQ(run("generate fan --n 6 -o " + fan).code, 0);
  auto r = run("count convex " + fan);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("10"), std::string::npos);
  auto o = run("oracle convex " + fan);
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("10"), std::string::npos);
  std::filesystem::remove(fan);
}

TEST(Cli, GenerateMinMonpath) {
  auto t = temp_path("monpath.json");
  ASSERT_EQ(run("generate min-monpath --l 3 -o " + t).code, 0);
  std::ifstream in(t);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["n"], 10);
  std::filesystem::remove(t);
}

TEST(Cli, JsonReportFields) {
  auto fan = temp_path("fan5.json");
  ASSERT_EQ(run("generate fan --n 5 -o " + fan).code, 0);
  auto r = run("--json count monotone-dir 1 2 " + fan);
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"command", "input_hash", "results", "timings", "seed"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["input_hash"].get<std::string>().rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(results_of("count monotone-dir --dir 1 2 " + fan), j["results"]);
  std::filesystem::remove(fan);
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(results_of("--seed 3 generate random --n 8"), results_of("--seed 3 generate random --n 8"));
  EXPECT_EQ(results_of("analyze growth-rate --k 5"), results_of("analyze growth-rate --k 5"));
}

TEST(Cli, Analyze) {
  EXPECT_EQ(results_of("analyze growth-rate --k 4")["growth_rate"], "1.700340161297188120");
  EXPECT_EQ(results_of("analyze eigenvalue --k 5")["lambda"], "4885 9 294153 2");
  EXPECT_EQ(results_of("analyze star-bound --n 10 --k 0")["bound"], "89/5");
  auto r = run("analyze tribonacci-root");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1.83928675521"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("generate gk --l 3 --k 9").code, 2);
  EXPECT_EQ(run("generate nope --n 3").code, 2);
  EXPECT_EQ(run("count bogus-metric x.json").code, 2);
  EXPECT_EQ(run("count convex " + temp_path("missing.json")).code, 1);

  auto bad = temp_path("cross.json");
  std::ofstream(bad) << R"({"n":4,"points":[[0,0],[2,2],[0,2],[2,0]],"edges":[[0,1],[2,3]]})";
  EXPECT_EQ(run("count convex " + bad).code, 1);

  auto tri = temp_path("tri.json");
  std::ofstream(tri) << R"({"n":3,"points":[[0,0],[2,0],[0,2]],"edges":[[0,1],[1,2],[2,0]]})";
  EXPECT_EQ(run("count star-center --at 1/2 1/2 " + tri).code, 0);
  EXPECT_EQ(run("count star-center --at 0 1 " + tri).code, 1);
  EXPECT_EQ(run("count monotone-all " + tri).code, 0);
  std::filesystem::remove(bad);
  std::filesystem::remove(tri);
}

TEST(Cli, VerifyTable3) {
  auto r = run("verify table3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}
