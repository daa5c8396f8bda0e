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

#ifndef STREAMLAB_WITNESSES_SUMS_H_
#define STREAMLAB_WITNESSES_SUMS_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "streamlab/core/symbols.h"
#include "streamlab/instances/vector_multiset.h"

namespace streamlab::witnesses {

using SumVector = std::vector<std::uint32_t>;

// Sum(V'): the distinct component-wise sums of mu vectors with distinct
// indices taken from V'. V' is the unblocked part of V, or the indices set
// in `mask` when one is given. Empty when |V'| < mu. Throws
// std::length_error when more than `budget` index sets would be visited.
std::set<SumVector> EnumerateSums(const instances::VectorMultiset& V,
                                  const std::vector<bool>* mask = nullptr,
                                  std::uint64_t budget = 1u << 26);

struct HamArrayCount {
  std::uint64_t distinct = 0;
  std::uint64_t examined = 0;
  bool exhaustive = false;
};

// Distinct HamArray(R, U') over U' in alphabet^(2 |R|). Exhaustive when that
// space has at most `budget` strings, otherwise `budget` uniform samples
// drawn with `seed` (a lower bound).
HamArrayCount CountDistinctHamArrays(const SymbolString& R,
                                     const std::vector<Symbol>& alphabet,
                                     std::uint64_t budget,
                                     std::uint64_t seed = 0);

}  // namespace streamlab::witnesses

#endif  // STREAMLAB_WITNESSES_SUMS_H_
