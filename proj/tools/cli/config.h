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

#ifndef STREAMLAB_TOOLS_CLI_CONFIG_H_
#define STREAMLAB_TOOLS_CLI_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "streamlab/engines/processor.h"

namespace streamlab::cli {

enum class Family { kRandom, kKn, kKqn, kToeplitzRandom, kHamming };

std::string_view FamilyName(Family family);
Family ParseFamily(std::string_view name);

inline constexpr char kOutEnvVar[] = "STREAMLAB_OUT";

struct ExperimentConfig {
  std::string command;
  engines::Problem problem = engines::Problem::kConvolution;
  engines::Algorithm algorithm = engines::Algorithm::kNaive;
  std::size_t n = 0;    // 0: family default (16, or minimal for hamming)
  std::uint64_t q = 0;  // 0: family default (5, or mu^2 + 2 for hamming)
  unsigned w = 64;
  std::uint64_t seed = 1;
  Family family = Family::kRandom;
  std::size_t trials = 10;
  std::string out;  // empty: $STREAMLAB_OUT, then ./streamlab_out

  unsigned mu = 2;
  unsigned gamma = 1;
  std::size_t ell = 2;
  std::size_t smallest_block = 4;
  std::vector<std::size_t> ns;
  std::string suite = "all";
  std::string instance;  // directory written by gen
  bool write_trace = false;

  // Throws std::invalid_argument naming the first violated constraint of the
  // chosen command and family.
  void Validate() const;
  std::size_t ResolvedN() const;
  std::uint64_t ResolvedQ() const;
  std::filesystem::path OutputDir() const;
};

}  // namespace streamlab::cli

#endif  // STREAMLAB_TOOLS_CLI_CONFIG_H_
