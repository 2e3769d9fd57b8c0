// Copyright 2026 The CSM Authors
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


// Exit codes, golden outputs and rerun determinism for every bundled dataset.
// Set CSM_UPDATE_GOLDENS=1 to rewrite tests/golden from the current build.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include <json.hpp>

#include "cli_cases.hpp"

namespace fs = std::filesystem;
using csm::cli::testing::CliCase;
using csm::cli::testing::cli_cases;
using csm::cli::testing::invoke;
using nlohmann::json;

namespace {

class SourceRoot : public ::testing::Environment {
  public:
    void SetUp() override { fs::current_path(CSM_SOURCE_DIR); }
};
const auto *const kRoot = ::testing::AddGlobalTestEnvironment(new SourceRoot);

std::string read_file(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json run_json(const std::vector<std::string> &args, int expect_code = 0) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, expect_code) << r.err;
    return json::parse(r.out);
}

class GoldenCase : public ::testing::TestWithParam<CliCase> {};

} // namespace

TEST_P(GoldenCase, exit_code_golden_and_rerun) {
    const auto &c = GetParam();
    const auto first = invoke(c.args);
    EXPECT_EQ(first.code, c.exit_code) << first.err;
    if (c.exit_code == 2) {
        EXPECT_FALSE(first.err.empty());
        EXPECT_EQ(first.err.rfind("csm: ", 0), 0u) << first.err;
    } else {
        EXPECT_TRUE(first.err.empty()) << first.err;
    }

    const auto second = invoke(c.args);
    EXPECT_EQ(second.code, first.code);
    EXPECT_EQ(second.out, first.out);

    const fs::path golden = fs::path(CSM_SOURCE_DIR) / "tests" / "golden" / (c.name + ".out");
    if (std::getenv("CSM_UPDATE_GOLDENS") != nullptr) {
        std::ofstream(golden, std::ios::binary) << first.out;
        GTEST_SKIP() << "rewrote " << golden;
    }
    ASSERT_TRUE(fs::exists(golden)) << golden;
    EXPECT_EQ(first.out, read_file(golden));
}

INSTANTIATE_TEST_SUITE_P(bundled, GoldenCase, ::testing::ValuesIn(cli_cases()),
                         [](const auto &info) { return info.param.name; });

TEST(cli, version) {
    const auto r = invoke({"--version"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "csm 0.3.0\n");
}

TEST(cli, born_values) {
    const auto j = run_json({"born", "datasets/states/maximally_mixed_dim3.json", "datasets/contexts/fourier_dim3.json"});
    for (const auto &p : j["probabilities"]) {
        EXPECT_NEAR(p.get<double>(), 1.0 / 3.0, 1e-12);
    }
    EXPECT_NEAR(j["sum"].get<double>(), 1.0, 1e-12);
    const auto t = run_json({"born", "datasets/states/pure_e1_dim3.json", "datasets/contexts/tilted_dim3.json"});
    EXPECT_NEAR(t["probabilities"][0].get<double>(), 1.0, 1e-12);
    const auto text = invoke({"--format", "text", "born", "datasets/states/maximally_mixed_dim3.json",
                              "datasets/contexts/fourier_dim3.json"});
    EXPECT_NE(text.out.find("0.3333333333"), std::string::npos) << text.out;
}

TEST(cli, gleason_demo_residual) {
    const auto j = run_json({"gleason-fit", "datasets/gleason/demo_mub_dim3.json"});
    EXPECT_LE(j["residual_rms"].get<double>(), 1e-10);
    EXPECT_EQ(j["design_rank"].get<int>(), 9);
}

TEST(cli, uhlhorn_verdicts) {
    const auto u = run_json({"uhlhorn", "datasets/uhlhorn/unitary_dim3.json"});
    EXPECT_EQ(u["classification"]["verdict"], "Unitary");
    EXPECT_LE(u["fit"]["residual"].get<double>(), 1e-8);
    const auto a = run_json({"uhlhorn", "datasets/uhlhorn/antiunitary_dim3.json"});
    EXPECT_EQ(a["classification"]["verdict"], "Antiunitary");
    EXPECT_TRUE(a["fit"]["antiunitary"].get<bool>());
}

TEST(cli, ks_results) {
    const auto c = run_json({"ks", "datasets/ks/cabello18_dim4.json"});
    EXPECT_EQ(c["status"], "UNSAT");
    EXPECT_FALSE(c["certificate"].is_null());
    const auto s = run_json({"ks", "datasets/ks/single_basis_dim3.json"}, 1);
    EXPECT_EQ(s["status"], "SAT");
}

TEST(cli, perm_path_results) {
    const auto t = run_json({"perm-path", "datasets/perm/transposition_n3.json"});
    EXPECT_TRUE(t["unitary_path"]["path_ok"].get<bool>());
    EXPECT_FALSE(t["orthogonal"]["connected_in_orthogonal_group"].get<bool>());
    const auto i = run_json({"perm-path", "datasets/perm/identity_n3.json"});
    EXPECT_TRUE(i["orthogonal"]["connected_in_orthogonal_group"].get<bool>());
    EXPECT_EQ(i["unitary_path"]["max_step_distance"].get<double>(), 0.0);
}

TEST(cli, simulate_results) {
    const auto r = run_json({"simulate", "datasets/states/e1_dim3.json", "datasets/contexts/repeat_standard_dim3.json"});
    for (const auto &rec : r["outcome_log"]) {
        EXPECT_EQ(rec["outcome"].get<int>(), 0);
    }
    const auto f = run_json({"--seed", "20240603", "simulate", "datasets/states/e1_dim3.json",
                             "datasets/contexts/fourier_dim3.json", "--repeats", "30000"});
    for (const auto &x : f["frequencies"][0]) {
        EXPECT_NEAR(x.get<double>(), 1.0 / 3.0, 0.01);
    }
}

TEST(cli, seed_changes_simulation) {
    const auto a = invoke({"--seed", "1", "simulate", "datasets/states/e1_dim3.json", "datasets/contexts/fourier_dim3.json", "--repeats", "50"});
    const auto b = invoke({"--seed", "2", "simulate", "datasets/states/e1_dim3.json", "datasets/contexts/fourier_dim3.json", "--repeats", "50"});
    EXPECT_NE(a.out, b.out);
}
