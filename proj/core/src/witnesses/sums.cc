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

#include "streamlab/witnesses/sums.h"

#include <stdexcept>

#include "streamlab/core/rng.h"
#include "streamlab/instances/hamming.h"

namespace streamlab::witnesses {

std::set<SumVector> EnumerateSums(const instances::VectorMultiset& V,
                                  const std::vector<bool>* mask,
                                  std::uint64_t budget) {
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < V.size(); ++i) {
    const bool in = mask != nullptr ? mask->at(i) : !V.blocked[i];
    if (in) pool.push_back(i);
  }
  const std::size_t k = V.mu;
  std::set<SumVector> sums;
  if (pool.size() < k) return sums;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::uint64_t visited = 0;
  while (true) {
    if (++visited > budget) {
      throw std::length_error("sub-multiset enumeration exceeds budget");
    }
    SumVector sum(V.mu, 0);
    for (std::size_t p : pick) {
      const instances::BinaryVector& v = V.vectors[pool[p]];
      for (std::size_t j = 0; j < V.mu; ++j) sum[j] += v[j];
    }
    sums.insert(std::move(sum));
    // Advance to the next k-combination of pool positions.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return sums;
}

HamArrayCount CountDistinctHamArrays(const SymbolString& R,
                                     const std::vector<Symbol>& alphabet,
                                     std::uint64_t budget,
                                     std::uint64_t seed) {
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  const std::size_t len = 2 * R.size();
  std::uint64_t space = 1;
  bool fits = true;
  for (std::size_t i = 0; i < len && fits; ++i) {
    if (space > budget / alphabet.size()) fits = false;
    space *= alphabet.size();
  }
  std::set<std::vector<Word>> seen;
  HamArrayCount count;
  std::vector<Symbol> u(len);
  if (fits) {
    count.exhaustive = true;
    std::vector<std::size_t> digits(len, 0);
    for (std::uint64_t code = 0; code < space; ++code) {
      for (std::size_t i = 0; i < len; ++i) u[i] = alphabet[digits[i]];
      seen.insert(instances::HamArray(R, SymbolString(R.alphabet(), u)));
      for (std::size_t i = 0; i < len; ++i) {
        if (++digits[i] < alphabet.size()) break;
        digits[i] = 0;
      }
    }
    count.examined = space;
  } else {
    Rng rng = Rng::Substream(seed, "hamarray_count");
    for (std::uint64_t s = 0; s < budget; ++s) {
      for (Symbol& x : u) x = alphabet[rng.Uniform(alphabet.size())];
      seen.insert(instances::HamArray(R, SymbolString(R.alphabet(), u)));
    }
    count.examined = budget;
  }
  count.distinct = seen.size();
  return count;
}

}  // namespace streamlab::witnesses
