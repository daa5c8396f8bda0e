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

#ifndef STREAMLAB_TOOLS_CLI_COMMANDS_H_
#define STREAMLAB_TOOLS_CLI_COMMANDS_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "cli/config.h"

namespace streamlab::cli {

// Each command writes its artifacts under config.OutputDir() and returns the
// process exit code: 0 iff every hard assertion held.
int CmdGen(const ExperimentConfig& config, std::ostream& log);
int CmdRun(const ExperimentConfig& config, std::ostream& log);
int CmdVerify(const ExperimentConfig& config, std::ostream& log);
int CmdSweep(const ExperimentConfig& config, std::ostream& log);

struct SweepRow {
  std::size_t n = 0;
  engines::Algorithm algorithm = engines::Algorithm::kNaive;
  std::uint64_t probes = 0;
  std::uint64_t sum_iv_pp = 0;
  std::uint64_t sum_iv_wr = 0;
  double amortized_probes = 0;  // probes / n
  double amortized_iv = 0;      // sum_iv_pp / n
  bool counting_bound_ok = true;
};

// One run per (n, algorithm) on a random instance of `problem` seeded from
// `seed`, in the order given.
std::vector<SweepRow> RunSweep(engines::Problem problem,
                               const std::vector<engines::Algorithm>& algos,
                               const std::vector<std::size_t>& ns,
                               std::uint64_t q, unsigned w,
                               std::uint64_t seed);

// True when amortized_iv never decreases along increasing n for `algo`.
bool AmortizedNondecreasing(const std::vector<SweepRow>& rows,
                            engines::Algorithm algo);

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace streamlab::cli

#endif  // STREAMLAB_TOOLS_CLI_COMMANDS_H_
