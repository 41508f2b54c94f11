// Copyright 2026 The follow_up_scenarios Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "follow_up/dataset.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace
{
struct RunResult
{
  int exit_code;
  std::string output;
};

RunResult run(const std::string & args)
{
  const std::string command = std::string(FOLLOWUP_CLI) + " " + args + " 2>&1";
  FILE * pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return {-1, {}};
  }
  std::string output;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string slurp(const fs::path & path)
{
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test
{
protected:
  void SetUp() override
  {
    dir_ = fs::temp_directory_path() /
           ("follow_up_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string & name) const { return (dir_ / name).string(); }

  fs::path dir_;
};
}  // namespace

TEST_F(CliTest, GenerateIsDeterministic)
{
  ASSERT_EQ(run("generate --n-series 100 --seed 42 --out " + path("a.json")).exit_code, 0);
  ASSERT_EQ(run("generate --n-series 100 --seed 42 --out " + path("b.json")).exit_code, 0);
  ASSERT_EQ(
    run("generate --n-series 100 --seed 42 --threads 4 --out " + path("c.json")).exit_code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("c.json")));
  const auto d = follow_up::read_dataset(path("a.json"));
  EXPECT_EQ(d.series.size(), 100u);
  EXPECT_EQ(d.provenance.config->seed, 42u);
}

TEST_F(CliTest, ConfigFileAndOverrides)
{
  std::ofstream(path("run.cfg")) << "n_series = 7\nseed = 3\nn_points = 5\n";
  ASSERT_EQ(run("generate --config " + path("run.cfg") + " --out " + path("a.csv")).exit_code, 0);
  const auto d = follow_up::read_dataset(path("a.csv"));
  EXPECT_EQ(d.series.size(), 7u);
  EXPECT_EQ(d.series[0].size(), 5u);
  ASSERT_EQ(
    run("generate --config " + path("run.cfg") + " --n-series 2 --out " + path("b.json"))
      .exit_code,
    0);
  EXPECT_EQ(follow_up::read_dataset(path("b.json")).series.size(), 2u);
}

TEST_F(CliTest, GenerateErrors)
{
  const auto missing = run("generate --config " + path("nope.cfg") + " --out " + path("a.csv"));
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_NE(missing.output.find("nope.cfg"), std::string::npos);

  std::ofstream(path("bad.cfg")) << "dt = -1\n";
  EXPECT_EQ(run("generate --config " + path("bad.cfg") + " --out " + path("a.csv")).exit_code, 1);
  std::ofstream(path("typo.cfg")) << "n_seriez = 3\n";
  const auto typo = run("generate --config " + path("typo.cfg") + " --out " + path("a.csv"));
  EXPECT_EQ(typo.exit_code, 1);
  EXPECT_NE(typo.output.find("line 1"), std::string::npos);
  EXPECT_EQ(run("generate --out " + path("a.txt")).exit_code, 1);
  EXPECT_EQ(run("generate --out " + path("missing_dir/a.csv")).exit_code, 2);
  EXPECT_EQ(run("generate").exit_code, 1);
}

TEST_F(CliTest, EvaluateWritesDss)
{
  ASSERT_EQ(run("generate --n-series 20 --out " + path("g.json")).exit_code, 0);
  ASSERT_EQ(run("evaluate --in " + path("g.json") + " --out " + path("e.csv")).exit_code, 0);
  const std::string csv = slurp(path("e.csv"));
  EXPECT_EQ(csv.find(",NA,"), std::string::npos);
  const auto d = follow_up::read_dataset(path("e.csv"));
  EXPECT_EQ(d.annotations.size(), 20u);
}

TEST_F(CliTest, EvaluateNonBrakingGivesNA)
{
  std::ofstream(path("coast.cfg")) << "n_series = 3\naccel_follower_mean = 1\naccel_follower_sd = 0\n";
  ASSERT_EQ(
    run("generate --config " + path("coast.cfg") + " --out " + path("g.json")).exit_code, 0);
  ASSERT_EQ(
    run("evaluate --a-min 7.5 --in " + path("g.json") + " --out " + path("e.csv")).exit_code, 0);
  EXPECT_NE(slurp(path("e.csv")).find(",NA,0"), std::string::npos);
}

TEST_F(CliTest, EvaluateErrors)
{
  EXPECT_EQ(run("evaluate --in " + path("missing.json") + " --out " + path("e.csv")).exit_code, 2);
  ASSERT_EQ(run("generate --n-series 2 --out " + path("g.csv")).exit_code, 0);
  // CSV carries no sampled parameters, so it cannot be evaluated.
  EXPECT_EQ(run("evaluate --in " + path("g.csv") + " --out " + path("e.csv")).exit_code, 1);
  ASSERT_EQ(run("generate --n-series 2 --out " + path("g.json")).exit_code, 0);
  EXPECT_EQ(
    run("evaluate --a-min 0 --in " + path("g.json") + " --out " + path("e.csv")).exit_code, 1);
}

TEST_F(CliTest, Validate)
{
  const auto result = run("validate");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("17.862"), std::string::npos);
  EXPECT_NE(result.output.find("known discrepancy"), std::string::npos);
  EXPECT_NE(result.output.find("validation PASSED"), std::string::npos);
  // 16 table rows.
  std::istringstream lines(result.output);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.find("ok") != std::string::npos || line.find("discrepancy") != std::string::npos) {
      rows += line.find("Note") == std::string::npos ? 1 : 0;
    }
  }
  EXPECT_GE(rows, 16);
}

TEST_F(CliTest, StatsAndPlot)
{
  ASSERT_EQ(run("generate --n-series 50 --seed 1 --out " + path("g.json")).exit_code, 0);
  ASSERT_EQ(run("evaluate --in " + path("g.json") + " --out " + path("e.json")).exit_code, 0);
  const auto stats = run("stats --in " + path("e.json"));
  EXPECT_EQ(stats.exit_code, 0);
  EXPECT_NE(stats.output.find("50 series"), std::string::npos);
  EXPECT_NE(stats.output.find("critical fraction"), std::string::npos);
  const auto kv = run("stats --kv --in " + path("e.json"));
  EXPECT_NE(kv.output.find("n_series = 50"), std::string::npos);

  EXPECT_EQ(run("stats --in " + path("g.json")).exit_code, 1);

  ASSERT_EQ(
    run("plot --in " + path("e.json") + " --scenario 3 --out " + path("p.svg")).exit_code, 0);
  EXPECT_NE(slurp(path("p.svg")).find("<svg"), std::string::npos);
  EXPECT_EQ(
    run("plot --in " + path("e.json") + " --scenario 50 --out " + path("q.svg")).exit_code, 1);
}

TEST_F(CliTest, StatsOnEmptyDataset)
{
  std::ofstream(path("empty.csv")) << follow_up::kCsvHeader << '\n';
  const auto result = run("stats --in " + path("empty.csv"));
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("0 series"), std::string::npos);
}

TEST_F(CliTest, HelpPerSubcommand)
{
  for (const char * sub : {"generate", "evaluate", "validate", "stats", "plot"}) {
    const auto result = run(std::string(sub) + " --help");
    EXPECT_EQ(result.exit_code, 0) << sub;
    EXPECT_NE(result.output.find("Usage"), std::string::npos) << sub;
  }
}
