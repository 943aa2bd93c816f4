// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qwalk/io.h"

namespace qwalk::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qwalk_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string WriteConfig(const std::string& name, const nlohmann::json& j) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << j.dump(2);
    return p.string();
  }

  int Invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qwalk");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::Run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  std::string Slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  static nlohmann::json GroverTorus() {
    return {{"graph", {{"generator", "torus"}, {"dims", {4, 4}}}},
            {"coin", "grover"},
            {"shift", "moving"},
            {"initial", {{"vertex", 0}, {"port", 0}}},
            {"steps", 12},
            {"seed", 5}};
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, EvolveWritesRhoAndManifest) {
  const std::string cfg = WriteConfig("c.json", GroverTorus());
  const fs::path out = dir_ / "evolve";
  ASSERT_EQ(Invoke({"evolve", "--config", cfg, "--out-dir", out.string()}), kExitOk)
      << err_.str();
  std::ifstream rho_in(out / "rho.csv");
  const auto rho = ReadRhoCsv(rho_in, 16, 1);
  ASSERT_EQ(rho.size(), 13u);
  const auto manifest = nlohmann::json::parse(Slurp(out / "manifest.json"));
  EXPECT_EQ(manifest["seed"], 5);
  EXPECT_EQ(manifest["steps"], 12);
  EXPECT_TRUE(manifest.contains("graph_fingerprint"));
  EXPECT_TRUE(manifest.contains("tool_version"));
  EXPECT_TRUE(manifest["warnings"].empty());
}

TEST_F(CliTest, ZeroStepsGivesOnlyTheInitialDistribution) {
  const std::string cfg = WriteConfig("c.json", GroverTorus());
  const fs::path out = dir_ / "t0";
  ASSERT_EQ(Invoke({"evolve", "--config", cfg, "--steps", "0", "--out-dir", out.string()}),
            kExitOk);
  std::ifstream rho_in(out / "rho.csv");
  const auto rho = ReadRhoCsv(rho_in, 16, 1);
  ASSERT_EQ(rho.size(), 1u);
  EXPECT_EQ(rho[0][0], 1.0);
}

TEST_F(CliTest, ExitCodes) {
  const std::string bad = (dir_ / "bad.json").string();
  std::ofstream(bad) << "{\"steps\": 3,,}";
  EXPECT_EQ(Invoke({"evolve", "--config", bad, "--out-dir", (dir_ / "x").string()}),
            kExitConfig);
  EXPECT_NE(err_.str().find("bad.json:1:"), std::string::npos) << err_.str();

  nlohmann::json scaled = GroverTorus();
  scaled["graph"] = {{"generator", "cycle"}, {"n", 4}};
  scaled["coin"] = {{"matrix", {{1.1, 0}, {0, 1.1}}}};
  const std::string cfg = WriteConfig("scaled.json", scaled);
  EXPECT_EQ(Invoke({"evolve", "--config", cfg, "--out-dir", (dir_ / "y").string()}),
            kExitConfig);
  EXPECT_NE(err_.str().find("column normalisation"), std::string::npos) << err_.str();

  EXPECT_EQ(Invoke({"evolve", "--config", (dir_ / "missing.json").string()}), kExitConfig);
}

TEST_F(CliTest, SampleIsDeterministicAndMatchesPersistedMatrices) {
  const std::string cfg = WriteConfig("c.json", GroverTorus());
  const fs::path eq = dir_ / "eq";
  ASSERT_EQ(Invoke({"equivalence", "--config", cfg, "--out-dir", eq.string()}), kExitOk)
      << err_.str();
  const fs::path a = dir_ / "a";
  const fs::path b = dir_ / "b";
  const fs::path c = dir_ / "c";
  ASSERT_EQ(Invoke({"sample", "--config", cfg, "-M", "20", "--out-dir", a.string()}), kExitOk);
  ASSERT_EQ(Invoke({"sample", "--config", cfg, "-M", "20", "--threads", "3", "--out-dir",
                    b.string()}),
            kExitOk);
  ASSERT_EQ(Invoke({"sample", "--matrices", eq.string(), "-M", "20", "--seed", "5",
                    "--out-dir", c.string()}),
            kExitOk)
      << err_.str();
  const std::string ta = Slurp(a / "trajectories.csv");
  EXPECT_FALSE(ta.empty());
  EXPECT_EQ(ta, Slurp(b / "trajectories.csv"));
  EXPECT_EQ(ta, Slurp(c / "trajectories.csv"));
}

TEST_F(CliTest, TorusDpMatchesEvolve) {
  const std::string cfg = WriteConfig("c.json", GroverTorus());
  const fs::path ev = dir_ / "ev";
  const fs::path dp = dir_ / "dp";
  ASSERT_EQ(Invoke({"evolve", "--config", cfg, "--out-dir", ev.string()}), kExitOk);
  ASSERT_EQ(Invoke({"torus-dp", "--config", cfg, "--out-dir", dp.string()}), kExitOk)
      << err_.str();
  std::ifstream ein(ev / "rho.csv");
  std::ifstream din(dp / "rho.csv");
  const auto re = ReadRhoCsv(ein, 16, 1);
  const auto rd = ReadRhoCsv(din, 16, 1);
  ASSERT_EQ(re.size(), rd.size());
  for (std::size_t t = 0; t < re.size(); ++t) {
    for (std::size_t v = 0; v < 16; ++v) EXPECT_NEAR(re[t][v], rd[t][v], 1e-9);
  }
  nlohmann::json hadamard = GroverTorus();
  hadamard["coin"] = "hadamard";
  const std::string hcfg = WriteConfig("h.json", hadamard);
  EXPECT_EQ(Invoke({"torus-dp", "--config", hcfg, "--out-dir", (dir_ / "z").string()}),
            kExitConfig);
}

TEST_F(CliTest, VerifyAndJsonFormat) {
  const std::string cfg = WriteConfig("c.json", GroverTorus());
  const fs::path eq = dir_ / "eq";
  ASSERT_EQ(Invoke({"equivalence", "--config", cfg, "--format", "json", "--out-dir",
                    eq.string()}),
            kExitOk);
  const auto report = nlohmann::json::parse(Slurp(eq / "report.json"));
  EXPECT_LE(report["max_propagation_residual"].get<double>(), 1e-10);
  const fs::path ev = dir_ / "ev";
  ASSERT_EQ(Invoke({"evolve", "--config", cfg, "--format", "json", "--out-dir", ev.string()}),
            kExitOk);
  EXPECT_EQ(nlohmann::json::parse(Slurp(ev / "rho.json")).size(), 13u);
  EXPECT_EQ(Invoke({"verify", "--config", cfg, "--out-dir", (dir_ / "v").string()}), kExitOk)
      << err_.str();
}

TEST_F(CliTest, RejectionAndTvd) {
  nlohmann::json j = GroverTorus();
  j["rejection"] = {{"length", 3}, {"attempts", 20000}};
  const std::string cfg = WriteConfig("c.json", j);
  const fs::path rj = dir_ / "rj";
  ASSERT_EQ(Invoke({"rejection", "--config", cfg, "--out-dir", rj.string()}), kExitOk)
      << err_.str();
  const auto rep = nlohmann::json::parse(Slurp(rj / "rejection.json"));
  EXPECT_EQ(rep["attempts"], 20000);
  const fs::path tv = dir_ / "tv";
  ASSERT_EQ(Invoke({"tvd", "--config", cfg, "--sizes", "10,100", "--times", "2,4", "--out-dir",
                    tv.string()}),
            kExitOk)
      << err_.str();
  const std::string csv = Slurp(tv / "convergence.csv");
  EXPECT_EQ(csv.substr(0, 8), "M,t,tvd\n");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

}  // namespace
}  // namespace qwalk::cli
