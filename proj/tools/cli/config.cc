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

#include "cli/config.h"

#include <cstdlib>
#include <stdexcept>

#include "streamlab/core/modular.h"

namespace streamlab::cli {

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kRandom:
      return "random";
    case Family::kKn:
      return "Kn";
    case Family::kKqn:
      return "Kqn";
    case Family::kToeplitzRandom:
      return "toeplitz_random";
    case Family::kHamming:
      return "hamming";
  }
  return "unknown";
}

Family ParseFamily(std::string_view name) {
  if (name == "random") return Family::kRandom;
  if (name == "Kn" || name == "kn") return Family::kKn;
  if (name == "Kqn" || name == "kqn") return Family::kKqn;
  if (name == "toeplitz_random") return Family::kToeplitzRandom;
  if (name == "hamming" || name == "hamming_pipeline") return Family::kHamming;
  throw std::invalid_argument(
      "unknown family '" + std::string(name) +
      "' (expected random, Kn, Kqn, toeplitz_random or hamming)");
}

std::size_t ExperimentConfig::ResolvedN() const {
  if (n != 0) return n;
  if (family == Family::kHamming) {
    const std::size_t r = std::size_t{mu} * mu * mu;
    std::size_t m = 1;
    while (m < r * r || m % (2 * r) != 0) m <<= 1;
    return m;
  }
  return 16;
}

std::uint64_t ExperimentConfig::ResolvedQ() const {
  if (q != 0) return q;
  return family == Family::kHamming ? std::uint64_t{mu} * mu + 2 : 5;
}

void ExperimentConfig::Validate() const {
  const std::size_t n = ResolvedN();
  const std::uint64_t q = ResolvedQ();
  if (!IsPowerOfTwo(n) || n < 2) {
    throw std::invalid_argument("--n " + std::to_string(n) +
                                " must be a power of two >= 2");
  }
  for (std::size_t m : ns) {
    if (!IsPowerOfTwo(m) || m < 2) {
      throw std::invalid_argument("--ns entry " + std::to_string(m) +
                                  " must be a power of two >= 2");
    }
  }
  if (q < 2) throw std::invalid_argument("--q must be >= 2");
  if (w < 1 || w > 64) throw std::invalid_argument("--w must lie in [1, 64]");
  if (trials == 0) throw std::invalid_argument("--trials must be >= 1");
  switch (family) {
    case Family::kToeplitzRandom:
      if (!IsPrime(q)) {
        throw std::invalid_argument("family toeplitz_random needs a prime --q");
      }
      break;
    case Family::kKqn:
      if (!IsPowerOfTwo(q)) {
        throw std::invalid_argument("family Kqn needs --q a power of two");
      }
      if (problem != engines::Problem::kMultiplication) {
        throw std::invalid_argument("family Kqn is a multiplication operand");
      }
      break;
    case Family::kHamming:
      if (mu < 2) throw std::invalid_argument("--mu must be >= 2");
      if (q < std::uint64_t{mu} * mu + 2) {
        throw std::invalid_argument("family hamming needs --q >= mu^2 + 2 = " +
                                    std::to_string(mu * mu + 2));
      }
      if (problem != engines::Problem::kHamming) {
        throw std::invalid_argument("family hamming needs --problem hamming");
      }
      break;
    default:
      break;
  }
}

std::filesystem::path ExperimentConfig::OutputDir() const {
  if (!out.empty()) return out;
  if (const char* env = std::getenv(kOutEnvVar); env != nullptr && *env) {
    return env;
  }
  return "streamlab_out";
}

}  // namespace streamlab::cli
