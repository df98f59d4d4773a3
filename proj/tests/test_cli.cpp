#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(H22_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("h22_cli_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, VerifyAllDeterministic) {
  const CliRun a = run("verify all --seed 7");
  const CliRun b = run("verify all --seed 7");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  ASSERT_TRUE(doc.is_array());
  EXPECT_GE(doc.size(), 20u);
  for (const auto& r : doc) {
    for (const char* key : {"check_id", "inputs", "lhs", "rhs", "tolerance", "verdict", "runtime_ms"}) {
      EXPECT_TRUE(r.contains(key)) << key;
    }
  }
}

TEST(Cli, VerifyThm33OneFinding) {
  const CliRun r = run("verify thm33");
  EXPECT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  int findings = 0;
  for (const auto& x : doc) findings += x["verdict"] == "finding";
  EXPECT_EQ(findings, 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify bogus").status, 2);
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("--trunc 4 verify basis").status, 2);
  EXPECT_EQ(run("--format xml verify basis").status, 2);
  EXPECT_EQ(run("--space sobolev kernel --w 0.1").status, 2);
  EXPECT_EQ(run("kernel --w 1.5").status, 2);
  EXPECT_EQ(run("kernel --w nonsense").status, 2);
  EXPECT_EQ(run("symbols --a0 1.2 --a1 0").status, 2);
  EXPECT_EQ(run("operator comp --symbol /nonexistent/file.csv").status, 2);
}

TEST(Cli, Kernel) {
  const CliRun zero = run("--format csv --trunc 8 kernel --w 0");
  EXPECT_EQ(zero.status, 0);
  EXPECT_NE(zero.out.find("n,coeff_re,coeff_im\n0,0.03125,0\n1,0,0\n"), std::string::npos);
  const CliRun j = run("--trunc 200 kernel --w 0.3");
  ASSERT_EQ(j.status, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_NEAR(doc["value_at_w"]["re"].get<double>(), doc["norm_sq"].get<double>(), 1e-12);
  EXPECT_EQ(doc["coefficients"].size(), 201u);
  const CliRun c = run("--format csv kernel --w 0.1+0.2i");
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(c.out, run("--format csv kernel --w 0.1,0.2").out);
}

TEST(Cli, Operator) {
  const auto half = temp_file("half.csv", "n,re,im\n1,0.5,0\n");
  const CliRun comp = run("--format csv --trunc 16 operator comp --symbol " + half.string());
  EXPECT_EQ(comp.status, 0);
  EXPECT_NE(comp.out.find("# symmetry_residual,0,"), std::string::npos);
  EXPECT_NE(comp.out.find("1,1,0.5,0\n"), std::string::npos);
  EXPECT_NE(comp.out.find("# hs_partial_sum,"), std::string::npos);

  const auto z = temp_file("z.csv", "1,1,0\n");
  const CliRun mult = run("--format json --trunc 256 operator mult --symbol " + z.string());
  ASSERT_EQ(mult.status, 0);
  EXPECT_NEAR(nlohmann::json::parse(mult.out)["operator_norm_estimate"].get<double>(), 1.94856, 1e-4);

  const auto big = temp_file("big.csv", "1,1.2,0\n");
  EXPECT_EQ(run("operator comp --symbol " + big.string()).status, 2);
  EXPECT_EQ(run("operator wcomp --symbol " + half.string()).status, 2);
  const auto one = temp_file("one.csv", "0,1,0\n");
  EXPECT_EQ(run("operator wcomp --symbol " + half.string() + " --weight " + one.string()).status, 0);
  const auto junk = temp_file("junk.csv", "0,1\n");
  EXPECT_EQ(run("operator mult --symbol " + junk.string()).status, 2);
}

TEST(Cli, Symbols) {
  const CliRun a = run("symbols --a0 0 --a1 0.5 --a2 3888");
  ASSERT_EQ(a.status, 0);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_LE(doc["kernel_identity_residual"].get<double>(), 1e-10);
  EXPECT_NEAR(doc["phi"][1]["re"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(doc["psi"][0]["re"].get<double>(), 1.0, 1e-13);
  EXPECT_EQ(doc["c"].size(), 1u);

  const CliRun b = run("symbols --a0 0.3 --a1 0.2 --a2 1");
  ASSERT_EQ(b.status, 0);
  const auto gen = nlohmann::json::parse(b.out);
  EXPECT_EQ(gen["c"].size(), 8u);
  EXPECT_GT(gen["kernel_identity_residual"].get<double>(), 0.0);
  // The closed-form z^3 w coefficients agree here as well.
  EXPECT_TRUE(gen["z3w"]["equal"].get<bool>());

  const CliRun c = run("symbols --a0 0.3 --a1 0 --a2 1");
  ASSERT_EQ(c.status, 0);
  EXPECT_TRUE(nlohmann::json::parse(c.out)["z3w"]["equal"].get<bool>());
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "h22_cli_test_out.json";
  std::filesystem::remove(path);
  const CliRun r = run("--out " + path.string() + " verify kernels");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc.size(), 3u);
}
