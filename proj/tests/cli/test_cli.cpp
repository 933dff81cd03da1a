// Copyright 2026 The codezeta Authors.
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

// Runs the installed command-line tool: exit codes, human output equal to
// the rendering of its own --json output, and the documented examples.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "render.hpp"

namespace {

struct Outcome {
  int exit_code = -1;
  std::string out;
};

Outcome run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + CODEZETA_CLI + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(CODEZETA_FIXTURE_DIR) + "/" + name; }

const std::vector<std::string> kCommands{"weights", "zeta", "rankgen", "greene",
                                         "twovar",  "bounds", "clifford", "report"};
const std::vector<const char*> kFixtures{"hamming74.code", "ext_hamming84.code", "hexacode.code",
                                         "rep21.code",     "rep21x2.code",       "code10.code"};

TEST(Cli, HumanOutputIsTheRenderedJson) {
  for (const std::string& cmd : kCommands) {
    for (const char* file : kFixtures) {
      const std::string args = cmd + " " + fixture(file);
      const Outcome human = run(args);
      const Outcome machine = run("--json " + args);
      SCOPED_TRACE(args);
      ASSERT_EQ(human.exit_code, machine.exit_code);
      const nlohmann::json doc = nlohmann::json::parse(machine.out);
      EXPECT_EQ(doc["command"], cmd);
      EXPECT_EQ(human.exit_code, doc["passed"].get<bool>() ? 0 : 1);
      EXPECT_EQ(human.out, codezeta::cli::render(doc));
    }
  }
}

TEST(Cli, JsonIsByteIdenticalAcrossRunsAndThreadCounts) {
  const std::string args = "--json report " + fixture("ext_hamming84.code");
  const Outcome first = run(args, "CODEZETA_THREADS=1");
  const Outcome second = run(args, "CODEZETA_THREADS=4");
  const Outcome third = run(args);
  EXPECT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(first.out, third.out);
}

TEST(Cli, ZetaOfHamming) {
  const Outcome r = run("zeta " + fixture("hamming74.code"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("P(T) = 1/5 + 2/5 T + 2/5 T^2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("functional equation: pass\n"), std::string::npos) << r.out;
}

TEST(Cli, CliffordViolationExitsOne) {
  const Outcome r = run("clifford " + fixture("code10.code") + " --exhaustive");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("witness: A = {2}\n"), std::string::npos) << r.out;
}

TEST(Cli, ExtremalUltraspherical) {
  const Outcome r = run("extremal --q 4 --c 2 --n 6 --ultraspherical");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("d = 4 "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lambda_m = 1/2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("roots on |T| = 0.5: pass\n"), std::string::npos) << r.out;
  const Outcome j = run("--json extremal --q 4 --c 2 --n 6 --ultraspherical");
  EXPECT_EQ(r.out, codezeta::cli::render(nlohmann::json::parse(j.out)));
}

TEST(Cli, ExtremalLargerCases) {
  for (const char* args : {"extremal --q 4 --c 2 --n 12 --ultraspherical", "extremal --q 4 --c 2 --n 18 --ultraspherical",
                           "extremal --q 2 --c 4 --n 8", "extremal --q 3 --c 3 --n 12"}) {
    EXPECT_EQ(run(args).exit_code, 0) << args;
  }
}

TEST(Cli, SampledClifford) {
  const std::string args = "clifford " + fixture("ext_hamming84.code") + " --sample 100 --seed 3";
  const Outcome a = run(args);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, run(args).out);
  EXPECT_NE(a.out.find("mode: 100 samples, seed 3\n"), std::string::npos) << a.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  const std::string ham = fixture("hamming74.code");
  EXPECT_EQ(run("").exit_code, 2);
  EXPECT_EQ(run("frobnicate " + ham).exit_code, 2);
  EXPECT_EQ(run("weights").exit_code, 2);
  EXPECT_EQ(run("weights /nonexistent/x.code").exit_code, 2);
  EXPECT_EQ(run("clifford " + ham + " --seed 3").exit_code, 2);
  EXPECT_EQ(run("clifford " + ham + " --exhaustive --sample 5").exit_code, 2);
  EXPECT_EQ(run("extremal --q 4 --c 2 --n 7").exit_code, 2);
  EXPECT_EQ(run("extremal --q 2 --c 2 --n 8 --ultraspherical").exit_code, 2);
  EXPECT_EQ(run("weights " + ham, "CODEZETA_THREADS=many").exit_code, 2);
}

std::string ones(int n) {
  std::string row;
  for (int i = 0; i < n; ++i) row += i ? " 1" : "1";
  return row + "\n";
}

TEST(Cli, MalformedFilesExitTwo) {
  const std::string dir = ::testing::TempDir();
  const std::vector<std::pair<std::string, std::string>> files{
      {"bad_header.code", "2 3\n1 1 1\n"},
      {"bad_symbol.code", "2 3 1\n1 2 1\n"},
      {"bad_field.code", "6 2 1\n1 1\n"},
      {"rank.code", "2 2 2\n1 1\n1 1\n"},
      {"too_long.code", "2 30 1\n" + ones(30)}};
  for (const auto& [name, text] : files) {
    const std::string path = dir + "/" + name;
    std::ofstream(path) << text;
    EXPECT_EQ(run("rankgen " + path).exit_code, 2) << name;
  }
}

}  // namespace
