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

#include "streamlab/core/params.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace streamlab {

bool IsPowerOfTwo(std::uint64_t x) { return std::has_single_bit(x); }

unsigned FloorLog2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("FloorLog2(0) is undefined");
  return static_cast<unsigned>(std::bit_width(x)) - 1;
}

unsigned CeilLog2(std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("CeilLog2(0) is undefined");
  return x == 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1));
}

unsigned BitWidth(std::uint64_t x) {
  return static_cast<unsigned>(std::bit_width(x));
}

Params Params::Create(std::size_t n, std::uint64_t q, unsigned w,
                      std::uint64_t seed) {
  if (!IsPowerOfTwo(n)) {
    throw std::invalid_argument("n must be a power of two, got " +
                                std::to_string(n));
  }
  if (q < 2) {
    throw std::invalid_argument("q must be at least 2, got " +
                                std::to_string(q));
  }
  if (w == 0 || w > 64) {
    throw std::invalid_argument("w must lie in [1, 64], got " +
                                std::to_string(w));
  }
  if (w < CeilLog2(n) || w < CeilLog2(q)) {
    throw std::invalid_argument(
        "w = " + std::to_string(w) +
        " cannot hold an address below n or a symbol below q");
  }
  Params p;
  p.n = n;
  p.q = q;
  p.w = w;
  p.delta = FloorLog2(q);
  p.seed = seed;
  return p;
}

}  // namespace streamlab
