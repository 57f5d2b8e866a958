// Copyright 2026 The isingbench Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("isingbench_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args) {
    const std::string cmd = "cd '" + dir_.string() + "' && SOURCE_DATE_EPOCH=0 '" ISINGBENCH_CLI "' " +
                            args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(const fs::path& p) {
    std::ifstream in(dir_ / p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("--version"), 0);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("generate --topology chimera:x --preset cbfm"), 2);
  EXPECT_EQ(run("orderstats --weights uniform:0,1 --n 3 --mode scaled_range"), 2);
  EXPECT_EQ(run("solve --instance missing.json --solver sa"), 2);
  std::ofstream(dir_ / "bad.json") << "{\"format\": \"ising-v1\"}";
  EXPECT_EQ(run("solve --instance bad.json --solver sa"), 1);
}

TEST_F(Cli, GenerateIsByteIdentical) {
  ASSERT_EQ(run("--seed 5 --out a generate --topology pegasus:2 --preset cbfm --count 2"), 0);
  ASSERT_EQ(run("--seed 5 --out b generate --topology pegasus:2 --preset cbfm --count 2"), 0);
  EXPECT_EQ(slurp("a/instance_001.json"), slurp("b/instance_001.json"));
  EXPECT_EQ(slurp("a/manifest.json").find("1970-01-01T00:00:00Z") != std::string::npos, true);
}

TEST_F(Cli, SolveVerifyAndThreads) {
  ASSERT_EQ(run("--seed 2 --out g generate --topology chimera:1 --hardness 0.8 --count 2"), 0);
  ASSERT_EQ(run("--seed 9 --threads 1 --out s1 solve --instance g/instance_000.json "
                "--solver sa --reads 20 "),
            0);
  ASSERT_EQ(run("--seed 9 --threads 4 --out s4 solve --instance g/instance_000.json "
                "--solver sa --reads 20 "),
            0);
  EXPECT_EQ(slurp("s1/samples.json"), slurp("s4/samples.json"));
  EXPECT_EQ(run("verify --instance g/instance_000.json --samples s1/samples.json"), 0);
  EXPECT_EQ(run("verify --instance g/instance_001.json --samples s1/samples.json"), 1);
}

TEST_F(Cli, BenchmarkAndKpOutputs) {
  ASSERT_EQ(run("--seed 1 --out g generate --topology chimera:1 --preset cbfm --count 2"), 0);
  ASSERT_EQ(run("--seed 1 --out bm benchmark --instances g/instance_000.json g/instance_001.json "
                "--candidate sqa:slices=4 --reads 10 --sweeps 100"),
            0);
  EXPECT_TRUE(fs::exists(dir_ / "bm/rl.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "bm/rl_boxplot.svg"));
  EXPECT_EQ(slurp("bm/rl.csv").rfind("# tool:", 0), 0u);
  ASSERT_EQ(run("--seed 1 --out kp kp --synthetic 20"), 0);
  EXPECT_TRUE(fs::exists(dir_ / "kp/kp_hardness.csv"));
  ASSERT_EQ(run("--format json --out kp2 kp --input kp/kp_instances"), 0);
  EXPECT_TRUE(fs::exists(dir_ / "kp2/kp_hardness.json"));
}

}  // namespace
