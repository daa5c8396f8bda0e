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

#ifndef STREAMLAB_INSTANCES_VECTOR_MULTISET_H_
#define STREAMLAB_INSTANCES_VECTOR_MULTISET_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "streamlab/core/rng.h"

namespace streamlab::instances {

using BinaryVector = std::vector<std::uint8_t>;

// Multiset V of 0/1 vectors of length mu, addressed by index, with a set of
// blocked indices. V' is the unblocked part.
struct VectorMultiset {
  unsigned mu = 0;
  std::vector<BinaryVector> vectors;
  std::vector<bool> blocked;

  std::size_t size() const { return vectors.size(); }
  std::vector<std::size_t> Available() const;
  void Block(std::size_t index) { blocked.at(index) = true; }
  void ClearBlocks() { blocked.assign(vectors.size(), false); }
};

// Throws std::invalid_argument unless every vector has length mu with 0/1
// entries.
VectorMultiset MakeVectorMultiset(unsigned mu,
                                  std::vector<BinaryVector> vectors);

// mu (mu - 1) independent uniform vectors.
VectorMultiset RandomVectorMultiset(unsigned mu, Rng& rng);

struct MultisetSearch {
  VectorMultiset best;
  std::size_t best_sum_count = 0;
  std::vector<std::size_t> trial_sum_counts;
};

// Draws `trials` random multisets and keeps one with the most distinct sums;
// ties go to the one with more ones, then to the lexicographically smallest
// vector list. Throws
// std::invalid_argument for mu < 2 or trials == 0.
MultisetSearch SearchVectorMultiset(unsigned mu, std::size_t trials,
                                    std::uint64_t seed);

}  // namespace streamlab::instances

#endif  // STREAMLAB_INSTANCES_VECTOR_MULTISET_H_
