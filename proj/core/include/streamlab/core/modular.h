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

#ifndef STREAMLAB_CORE_MODULAR_H_
#define STREAMLAB_CORE_MODULAR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "streamlab/core/params.h"

namespace streamlab {

// Residue arithmetic on [q]. Inputs are assumed reduced.
inline Word ModAdd(Word a, Word b, Word q) {
  const Word s = a + b;
  return (s >= q || s < a) ? s - q : s;
}
inline Word ModSub(Word a, Word b, Word q) { return a >= b ? a - b : a + (q - b); }
inline Word ModMul(Word a, Word b, Word q) {
  if (((a | b) >> 32) == 0) return a * b % q;
  return static_cast<Word>(static_cast<Uint128>(a) * b % q);
}
Word ModPow(Word base, std::uint64_t exp, Word q);
// Inverse modulo a prime q; a must be nonzero mod q.
Word ModInverse(Word a, Word q);
bool IsPrime(std::uint64_t x);

using ModMatrix = std::vector<std::vector<Word>>;

std::size_t RankModPrime(ModMatrix m, Word q);

struct LinearSolution {
  // Empty when the system is inconsistent.
  std::optional<std::vector<Word>> solution;
  std::size_t kernel_dim = 0;
};

// Solves m * x = rhs over Z/qZ, q prime, by Gauss-Jordan elimination. When
// the kernel is nontrivial, free variables are set to zero.
LinearSolution SolveModPrime(ModMatrix m, std::vector<Word> rhs, Word q);

}  // namespace streamlab

#endif  // STREAMLAB_CORE_MODULAR_H_
