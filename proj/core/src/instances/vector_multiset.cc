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

#include "streamlab/instances/vector_multiset.h"

#include <stdexcept>

#include "streamlab/witnesses/sums.h"

namespace streamlab::instances {

std::vector<std::size_t> VectorMultiset::Available() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!blocked[i]) out.push_back(i);
  }
  return out;
}

VectorMultiset MakeVectorMultiset(unsigned mu,
                                  std::vector<BinaryVector> vectors) {
  for (const BinaryVector& v : vectors) {
    if (v.size() != mu) {
      throw std::invalid_argument("vector length differs from mu");
    }
    for (std::uint8_t b : v) {
      if (b > 1) throw std::invalid_argument("vector entries must be 0 or 1");
    }
  }
  VectorMultiset V{mu, std::move(vectors), {}};
  V.ClearBlocks();
  return V;
}

VectorMultiset RandomVectorMultiset(unsigned mu, Rng& rng) {
  std::vector<BinaryVector> vectors(mu * (mu - 1), BinaryVector(mu));
  for (BinaryVector& v : vectors) {
    for (std::uint8_t& b : v) b = rng.Coin() ? 1 : 0;
  }
  return MakeVectorMultiset(mu, std::move(vectors));
}

namespace {

std::size_t Weight(const VectorMultiset& V) {
  std::size_t ones = 0;
  for (const BinaryVector& v : V.vectors) {
    for (std::uint8_t b : v) ones += b;
  }
  return ones;
}

}  // namespace

MultisetSearch SearchVectorMultiset(unsigned mu, std::size_t trials,
                                    std::uint64_t seed) {
  if (mu < 2) throw std::invalid_argument("mu must be >= 2");
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  Rng rng = Rng::Substream(seed, "vector_multiset");
  MultisetSearch result;
  std::size_t best_weight = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    VectorMultiset V = RandomVectorMultiset(mu, rng);
    const std::size_t count = witnesses::EnumerateSums(V).size();
    result.trial_sum_counts.push_back(count);
    const std::size_t weight = Weight(V);
    if (trial == 0 || count > result.best_sum_count ||
        (count == result.best_sum_count &&
         (weight > best_weight ||
          (weight == best_weight && V.vectors < result.best.vectors)))) {
      best_weight = weight;
      result.best = std::move(V);
      result.best_sum_count = count;
    }
  }
  return result;
}

}  // namespace streamlab::instances
