#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " GAINDEX_CLI_PATH " " + args + " 2>/dev/null";
  CliRun result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST(Cli, ComputeJson) {
  const CliRun r = run("compute C4 --format json");
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc[0]["indices"]["GA1"]["exact"], "4");
  EXPECT_EQ(doc[0]["indices"]["M1"]["exact"], "16");
  const CliRun s5 = run("compute S5 --format json");
  EXPECT_EQ(nlohmann::json::parse(s5.out)[0]["indices"]["GA1"]["exact"], "16/5");
}

TEST(Cli, InputSources) {
  const auto path = std::filesystem::temp_directory_path() / "gaindex_cli_test.el";
  std::ofstream(path) << "3 3\n0 1\n1 2\n0 2\n";
  const CliRun file = run("compute -i " + path.string() + " --format json");
  ASSERT_EQ(file.code, 0);
  EXPECT_EQ(nlohmann::json::parse(file.out)[0]["indices"]["GA1"]["exact"], "3");
  const CliRun inline_g6 = run("compute Bw --format json");
  EXPECT_EQ(nlohmann::json::parse(inline_g6.out)[0]["indices"]["GA1"]["exact"], "3");
  const CliRun piped = run("compute --format csv < " + path.string());
  EXPECT_EQ(piped.code, 0);
  EXPECT_NE(piped.out.find("GA1"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("check S5 --theorems t_end").code, 0);
  EXPECT_EQ(run("check P5 --theorems t_line8").code, 0);
  EXPECT_EQ(run("check C4 --theorems c_pi1tris --alpha 2").code, 1);
  EXPECT_EQ(run("check C4 --theorems nope").code, 2);
  EXPECT_EQ(run("linegraph P2").code, 2);
  EXPECT_EQ(run("compute 'not a graph!'").code, 2);
  EXPECT_EQ(run("sweep --nmax 8").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, CheckJson) {
  const CliRun r = run("check S5 --theorems t_end --format json");
  const auto doc = nlohmann::json::parse(r.out);
  const auto& report = doc[0]["reports"][0];
  EXPECT_EQ(report["theorem_id"], "t_end");
  EXPECT_EQ(report["equality"], true);
  EXPECT_EQ(report["characterization_consistent"], true);
}

TEST(Cli, LineGraph) {
  const CliRun r = run("linegraph S4 --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"Bw\""), std::string::npos);
}

TEST(Cli, SweepIsReproducible) {
  const std::string args = "sweep --nmax 4 --trials 50 --seed 7 --theorems t_end,gam20 --format json";
  const CliRun a = run(args);
  const CliRun b = run(args + " --threads 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PrecisionPrecedence) {
  auto bits = [](const CliRun& r) {
    return nlohmann::json::parse(r.out)[0]["indices"]["GA1"]["precision_bits"].get<int>();
  };
  EXPECT_EQ(bits(run("compute P3 --format json")), 53);
  EXPECT_EQ(bits(run("compute P3 --format json", "GAINDEX_PRECISION=100")), 100);
  EXPECT_EQ(bits(run("--precision 80 compute P3 --format json", "GAINDEX_PRECISION=100")), 80);
}

TEST(Cli, Extremal) {
  const CliRun r = run("extremal --n 5 --m 4 --objective min");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("16/5"), std::string::npos);
}
