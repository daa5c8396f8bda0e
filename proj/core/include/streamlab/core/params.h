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

#ifndef STREAMLAB_CORE_PARAMS_H_
#define STREAMLAB_CORE_PARAMS_H_

#include <cstddef>
#include <cstdint>

namespace streamlab {

using Symbol = std::uint32_t;
using Word = std::uint64_t;
using Address = std::uint64_t;
using Epoch = std::uint64_t;
// Wide intermediate for products and carries.
__extension__ typedef unsigned __int128 Uint128;

bool IsPowerOfTwo(std::uint64_t x);
unsigned FloorLog2(std::uint64_t x);
unsigned CeilLog2(std::uint64_t x);
// Number of bits needed to write x in binary; BitWidth(0) == 0.
unsigned BitWidth(std::uint64_t x);

// Problem parameters shared by every module.
//
//   n      window length, also the number of arrivals (power of two)
//   q      alphabet size / digit base, at least 2
//   w      cell width in bits; a cell holds an address or a symbol
//   delta  bits per symbol, floor(log2 q)
//   seed   root seed for every random substream
struct Params {
  std::size_t n = 0;
  std::uint64_t q = 2;
  unsigned w = 64;
  unsigned delta = 1;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument when n is not a power of two, q < 2,
  // w > 64, or w is too narrow for ceil(log2 n) or ceil(log2 q) bits.
  static Params Create(std::size_t n, std::uint64_t q, unsigned w = 64,
                       std::uint64_t seed = 0);
};

}  // namespace streamlab

#endif  // STREAMLAB_CORE_PARAMS_H_
