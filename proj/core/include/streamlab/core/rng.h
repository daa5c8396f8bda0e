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

#ifndef STREAMLAB_CORE_RNG_H_
#define STREAMLAB_CORE_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace streamlab {

// Seeded generator with platform-independent bounded draws. Each module pulls
// its own named substream from the root seed, so instance generation and
// stream sampling stay reproducible independently of one another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng Substream(std::uint64_t root_seed, std::string_view name);

  std::uint64_t Next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound);
  bool Coin() { return (Next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace streamlab

#endif  // STREAMLAB_CORE_RNG_H_
