// Copyright 2026 The Streamlab Authors
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

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "cli/config.h"
#include "cli/suites.h"

namespace {

using streamlab::cli::ExperimentConfig;

void AddCommon(CLI::App* cmd, ExperimentConfig& c, std::string& problem,
               std::string& algo, std::string& family) {
  cmd->add_option("--problem", problem, "conv, mult or hamming");
  cmd->add_option("--algo", algo, "naive or fast");
  cmd->add_option("--n", c.n, "stream length, a power of two");
  cmd->add_option("--q", c.q, "alphabet size");
  cmd->add_option("--w", c.w, "cell width in bits");
  cmd->add_option("--seed", c.seed, "root seed");
  cmd->add_option("--family", family,
                  "random, Kn, Kqn, toeplitz_random or hamming");
  cmd->add_option("--trials", c.trials, "random trials per check");
  cmd->add_option("--out", c.out,
                  "output directory (default $STREAMLAB_OUT or "
                  "./streamlab_out)");
  cmd->add_option("--mu", c.mu, "hamming construction parameter");
  cmd->add_option("--gamma", c.gamma, "cyclic code parameter");
  cmd->add_option("--smallest-block", c.smallest_block,
                  "fast engine direct-lag threshold");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cell-probe laboratory for online convolution, multiplication "
               "and Hamming distance"};
  app.require_subcommand(1);
  ExperimentConfig c;
  std::string problem = "conv";
  std::string algo = "naive";
  std::string family = "random";

  CLI::App* gen = app.add_subcommand("gen", "build an instance bundle");
  CLI::App* run = app.add_subcommand("run", "run a processor under tracing");
  CLI::App* verify = app.add_subcommand("verify", "run witness suites");
  CLI::App* sweep = app.add_subcommand("sweep", "probe growth table");
  for (CLI::App* cmd : {gen, run, verify, sweep}) {
    AddCommon(cmd, c, problem, algo, family);
  }
  run->add_option("--instance", c.instance, "directory written by gen");
  run->add_flag("--trace", c.write_trace, "also write trace.csv");
  verify->add_option("--suite", c.suite, "suite name or all")
      ->check(CLI::IsMember([] {
        std::vector<std::string> names = streamlab::cli::SuiteNames();
        names.push_back("all");
        return names;
      }()));
  verify->add_option("--ell", c.ell, "Toeplitz dimension");
  sweep->add_option("--ns", c.ns, "stream lengths")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    c.problem = streamlab::engines::ParseProblem(problem);
    c.algorithm = streamlab::engines::ParseAlgorithm(algo);
    c.family = streamlab::cli::ParseFamily(family);
    c.Validate();
    if (gen->parsed()) {
      c.command = "gen";
      return streamlab::cli::CmdGen(c, std::cout);
    }
    if (run->parsed()) {
      c.command = "run";
      return streamlab::cli::CmdRun(c, std::cout);
    }
    if (verify->parsed()) {
      c.command = "verify";
      return streamlab::cli::CmdVerify(c, std::cout);
    }
    c.command = "sweep";
    return streamlab::cli::CmdSweep(c, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
