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

#ifndef STREAMLAB_TOOLS_CLI_INSTANCE_H_
#define STREAMLAB_TOOLS_CLI_INSTANCE_H_

#include <filesystem>
#include <optional>
#include <string>

#include "cli/config.h"
#include "streamlab/core/symbols.h"
#include "streamlab/instances/hamming.h"

namespace streamlab::cli {

struct Instance {
  SymbolString fixed;
  SymbolString stream;
  std::optional<instances::HammingInstance> hamming;
  std::string manifest_json;  // construction parameters and metrics
};

// Builds the fixed operand and a stream for the configured family. Randomness
// comes from named substreams of config.seed.
Instance BuildInstance(const ExperimentConfig& config);

// fixed.json, stream.json and manifest.json under `dir`.
void SaveInstance(const Instance& instance, const std::filesystem::path& dir);
// Reads fixed.json and stream.json; the manifest is kept verbatim.
Instance LoadInstance(const std::filesystem::path& dir);

}  // namespace streamlab::cli

#endif  // STREAMLAB_TOOLS_CLI_INSTANCE_H_
