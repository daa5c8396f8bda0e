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

#ifndef STREAMLAB_TOOLS_CLI_SUITES_H_
#define STREAMLAB_TOOLS_CLI_SUITES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cli/config.h"
#include "streamlab/core/symbols.h"
#include "streamlab/engines/processor.h"
#include "streamlab/probelab/info_transfer.h"
#include "streamlab/probelab/trace.h"
#include "streamlab/witnesses/decode.h"

namespace streamlab::cli {

enum class Status { kPass, kFail, kWarn };
std::string_view StatusName(Status status);

struct SuiteLine {
  std::string name;
  Status status = Status::kPass;
  std::string detail;
};

struct SuiteResult {
  std::vector<SuiteLine> lines;
  std::vector<witnesses::DecodeReport> decodes;
  // Probe count and sum of I_v of every traced run, for the counting bound.
  std::uint64_t traced_runs = 0;
  bool counting_bound_ok = true;

  bool failed() const;
};

// One processor run on U with its probes counted and I_v accumulated.
struct TracedRun {
  OutputArray outputs;
  std::uint64_t probes = 0;
  std::uint64_t reads = 0;
  std::uint64_t writes = 0;
  probelab::InfoTransferTree tree;
  std::uint64_t sum_iv_pp = 0;
  std::uint64_t sum_iv_wr = 0;
  probelab::ProbeTrace trace;  // empty unless requested
  engines::KernelStats kernels;

  bool counting_bound_ok() const {
    return sum_iv_pp <= probes && sum_iv_wr <= probes;
  }
};

TracedRun RunTraced(const engines::OnlineProcessor& processor,
                    const SymbolString& U, bool keep_trace,
                    bool track_written_read = true);

// conv-kn, toeplitz-fraction, toeplitz-decode, encode-roundtrip, kqn,
// hamming, cyclic-code, sums, mult-ambiguity, equivalence.
const std::vector<std::string>& SuiteNames();

// Runs one suite, or every suite for "all". Throws std::invalid_argument for
// an unknown name.
SuiteResult RunSuite(const std::string& name, const ExperimentConfig& config);

}  // namespace streamlab::cli

#endif  // STREAMLAB_TOOLS_CLI_SUITES_H_
