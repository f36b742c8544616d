// Copyright 2026 The wtred Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include "wtred/errors.h"
#include "wtred/tables.h"

using namespace wtred;
using json = nlohmann::json;

namespace {

struct CliRun {
    int status;
    std::string out;
};

CliRun run_cli(const std::string &args) {
    std::string cmd = std::string(WTRED_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) {
        return {-1, ""};
    }
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) {
        out.append(buf, got);
    }
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / ("wtred_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string &name, const std::string &text) {
    auto path = scratch_dir() / name;
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(Tables, first_table_at_desk_scale) {
    TableOptions o;
    std::string csv = table_csv("t1", o);
    EXPECT_EQ(csv.rfind("# wtred 0.1.0 table=t1 scale=desk seed=0\n", 0), 0u);
    EXPECT_NE(csv.find("\"[6,3,3]\",\"[[45,9,3]]\",0.200,\"[[117,9,4]]\",0.077,\"[[65,9,4]]\",0.138"),
              std::string::npos);
    EXPECT_NE(csv.find("\"[7,3,4]\",\"[[65,9,4]]\""), std::string::npos);
    EXPECT_NE(csv.find("\"[7,4,3]\",\"[[58,16,3]]\""), std::string::npos);
}

TEST(Tables, out_of_scope_and_unknown_ids) {
    EXPECT_THROW(table_csv("t7", {}), ValidationError);
    EXPECT_THROW(table_csv("t2", {}), ValidationError);
    EXPECT_THROW(table_csv("nope", {}), ValidationError);
    auto ids = table_ids();
    EXPECT_NE(std::find(ids.begin(), ids.end(), "t4"), ids.end());
}

TEST(Cli, build_reports_parameters_and_provenance) {
    CliRun r = run_cli("build --fixture 633 --construction hgp");
    ASSERT_EQ(r.status, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["code"]["params"], "[[45,9,3]]");
    EXPECT_EQ(j["tool"], "wtred");
    EXPECT_EQ(j["version"], version());
    EXPECT_TRUE(j.contains("config_hash"));
}

TEST(Cli, reduce_of_light_matrix_is_a_noop) {
    std::string m = write_file("light.txt", "2 3\n110\n011\n");
    CliRun r = run_cli("reduce --no-distance --matrix " + m);
    ASSERT_EQ(r.status, 0);
    json j = json::parse(r.out);
    EXPECT_TRUE(j["noop"].get<bool>());
    EXPECT_TRUE(j["k_preserved"].get<bool>());
}

TEST(Cli, exit_codes) {
    std::string empty = write_file("empty.txt", "");
    EXPECT_EQ(run_cli("params --matrix " + empty).status, 1);
    EXPECT_EQ(run_cli("tables t7").status, 1);
    EXPECT_EQ(run_cli("build --fixture nothing").status, 1);
    EXPECT_EQ(run_cli("tables t1").status, 0);
}

TEST(Cli, config_file_and_flags_hash_alike) {
    std::string cfg = write_file("cfg.json", R"({"fixture":"633","construction":"hgp","seed":7,"no_distance":true})");
    CliRun a = run_cli("build --config " + cfg);
    CliRun b = run_cli("build --fixture 633 --construction hgp --seed 7 --no-distance");
    CliRun c = run_cli("build --config " + cfg + " --seed 8");
    ASSERT_EQ(a.status, 0);
    ASSERT_EQ(b.status, 0);
    ASSERT_EQ(c.status, 0);
    json ja = json::parse(a.out), jb = json::parse(b.out), jc = json::parse(c.out);
    EXPECT_EQ(ja["config_hash"], jb["config_hash"]);
    EXPECT_NE(ja["config_hash"], jc["config_hash"]);
    EXPECT_EQ(jc["seed"], 8);
    std::string bad = write_file("bad.json", R"({"colour":"blue"})");
    EXPECT_EQ(run_cli("build --config " + bad).status, 1);
}
