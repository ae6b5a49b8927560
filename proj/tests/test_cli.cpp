#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(JORDANC_EXE) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json without_wall_time(nlohmann::json j) {
  j.erase("wall_time");
  return j;
}

}  // namespace

TEST(Cli, ProductReportsClassification) {
  const CliRun r = run("product --left R2 --right C2@univ");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("suite"), "product");
  for (const char* key : {"entries", "seed", "tolerances", "summary"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.at("summary").at("fail"), 0);
}

TEST(Cli, SameSeedSameReport) {
  const CliRun a = run("--seed 11 verify associativity");
  const CliRun b = run("--seed 11 verify associativity");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(without_wall_time(nlohmann::json::parse(a.out)), without_wall_time(nlohmann::json::parse(b.out)));
}

TEST(Cli, ExceptionalAlgebraIsRefused) {
  const CliRun r = run("product --left O3 --right R2");
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, InvalidSpecIsRejected) {
  EXPECT_EQ(run("product --left X9 --right R2").code, 2);
  EXPECT_NE(run("verify no_such_suite").code, 0);
  EXPECT_NE(run("product --left R2").code, 0);
}

TEST(Cli, MarkdownFormat) {
  const CliRun r = run("--format md product --left R2 --right R2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| "), std::string::npos);
  EXPECT_NE(r.out.find("R4"), std::string::npos);
}

TEST(Cli, BothFormatsWriteTwoFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "jordanc_cli_test";
  std::filesystem::create_directories(dir);
  const auto base = dir / "tomo";
  const CliRun r = run("--format both --out " + base.string() + " verify tomography");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "tomo.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "tomo.md"));
  std::ifstream f(dir / "tomo.json");
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j.at("suite"), "tomography");
  std::filesystem::remove_all(dir);
}
