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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "codezeta/codezeta.h"
#include "render.hpp"

namespace {

constexpr int kUsageExit = 2;

struct Options {
  bool json = false;
  std::string file;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int q = 0;
  int c = 0;
  int n = 0;
  bool ultraspherical = false;
};

bool apply_thread_cap() {
  const char* env = std::getenv("CODEZETA_THREADS");
  if (env == nullptr || *env == '\0') return true;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || env[0] == '-') {
    std::cerr << "error: CODEZETA_THREADS must be a nonnegative integer\n";
    return false;
  }
  cz_set_worker_count(static_cast<unsigned>(v));
  return true;
}

int finish(cz_status status, char* doc, bool json) {
  if (doc == nullptr) {
    std::cerr << "error: " << cz_last_error() << "\n";
    return cz_exit_code(status);
  }
  if (json) {
    std::cout << doc << "\n";
  } else {
    std::cout << codezeta::cli::render(nlohmann::json::parse(doc));
  }
  cz_string_free(doc);
  return cz_exit_code(status);
}

template <class Call>
int with_code(const Options& opt, Call&& call) {
  cz_code* code = nullptr;
  const cz_status loaded = cz_code_load(opt.file.c_str(), &code);
  if (loaded != CZ_OK) {
    std::cerr << "error: " << cz_last_error() << "\n";
    return kUsageExit;
  }
  char* doc = nullptr;
  const cz_status status = call(code, &doc);
  cz_code_free(code);
  return finish(status, doc, opt.json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight enumerators, zeta polynomials and matroid invariants of linear codes"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print the JSON report instead of text");

  const auto file_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", opt.file, "Code file")->required()->check(CLI::ExistingFile);
    return sub;
  };
  CLI::App* weights = file_command("weights", "Weight distribution, d and d_dual");
  CLI::App* zeta = file_command("zeta", "Zeta polynomial by both routes, functional equation, distance relation");
  CLI::App* rankgen = file_command("rankgen", "Rank-generating polynomials W, W_n and W_n+");
  CLI::App* greene = file_command("greene", "Greene identities");
  CLI::App* twovar = file_command("twovar", "Two-variable zeta function");
  CLI::App* bounds = file_command("bounds", "Divisibility and self-dual bounds");
  CLI::App* clifford = file_command("clifford", "Clifford inequality 2 r(A) >= |A| over column subsets");
  CLI::Option* exhaustive = clifford->add_flag("--exhaustive", opt.exhaustive, "Visit all 2^n subsets (default)");
  CLI::Option* sample = clifford->add_option("--sample", opt.samples, "Number of random subsets")->check(
      CLI::PositiveNumber);
  CLI::Option* seed = clifford->add_option("--seed", opt.seed, "Seed for --sample");
  exhaustive->excludes(sample);
  seed->needs(sample);
  CLI::App* report = file_command("report", "Every per-code report");
  CLI::App* extremal = app.add_subcommand("extremal", "Extremal self-dual weight enumerator");
  extremal->add_option("--q", opt.q, "Field size")->required();
  extremal->add_option("--c", opt.c, "Weight divisor")->required();
  extremal->add_option("--n", opt.n, "Length")->required();
  extremal->add_flag("--ultraspherical", opt.ultraspherical, "Check the Gegenbauer identity and root radii");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageExit;
  }
  if (!apply_thread_cap()) return kUsageExit;

  if (extremal->parsed()) {
    char* doc = nullptr;
    const cz_status status = cz_report_extremal(opt.q, opt.c, opt.n, opt.ultraspherical ? 1 : 0, &doc);
    return finish(status, doc, opt.json);
  }
  if (weights->parsed()) return with_code(opt, cz_report_weights);
  if (zeta->parsed()) return with_code(opt, cz_report_zeta);
  if (rankgen->parsed()) return with_code(opt, cz_report_rankgen);
  if (greene->parsed()) return with_code(opt, cz_report_greene);
  if (twovar->parsed()) return with_code(opt, cz_report_twovar);
  if (bounds->parsed()) return with_code(opt, cz_report_bounds);
  if (report->parsed()) return with_code(opt, cz_report_full);
  if (clifford->parsed()) {
    const bool sampled = sample->count() > 0;
    return with_code(opt, [&](const cz_code* code, char** doc) {
      return cz_report_clifford(code, sampled ? 0 : 1, opt.samples, opt.seed, doc);
    });
  }
  return kUsageExit;
}
