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

#ifndef STREAMLAB_INSTANCES_HAMMING_H_
#define STREAMLAB_INSTANCES_HAMMING_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "streamlab/core/symbols.h"
#include "streamlab/instances/cyclic_code.h"
#include "streamlab/instances/vector_multiset.h"

namespace streamlab::instances {

// R = rho_0 ... rho_{mu^2 - 1}, |R| = mu^3, with rho_i[j] = i when
// v_i[j] = 1 and STAR otherwise; blocks past |V| are all STAR. Throws
// std::invalid_argument when |V| > mu^2 or q < mu^2 + 2.
SymbolString BuildR(const VectorMultiset& V, std::uint64_t q);

// HamArray(R, U)[a] = Ham(R, U[a, a + |R| - 1]) for a in [0, |U| - |R|].
std::vector<Word> HamArray(const SymbolString& R, const SymbolString& U);

// Starts n - 1 - 2^j of the R copies in F, for every 2^j >= r with a
// non-negative start, in increasing order.
std::vector<std::size_t> CopyStarts(std::size_t n, std::size_t r);

// All STAR except a copy of R at each CopyStarts position. Throws
// std::invalid_argument unless n is a power of two, n >= r^2 and 2r | n.
SymbolString BuildHammingF(const SymbolString& R, std::size_t n);

// Smallest n accepted by BuildHammingF for |R| = r.
std::size_t MinimalHammingN(std::size_t r);

// Population of U' (length 2r) round by round. Round k lives in phase
// k / P and sub-round k % P, P = max(1, (mu - 1) / 64); there are mu phases.
// Each phase starts one step further than the previous phase ended. In a round
// at alignment s, index i is written at position s + (i + 1) mu, so for
// m in 1..mu, HamArray[s + m] = r - sum[mu - m].
std::size_t RoundsPerPhase(unsigned mu);
std::size_t MaxRounds(unsigned mu);
std::size_t RoundAlignment(unsigned mu, std::size_t round);

struct PopulateRound {
  std::size_t alignment = 0;
  std::vector<std::size_t> indices;
  std::vector<std::uint32_t> sum;  // component-wise sum of chosen vectors
  // Predicted HamArray[alignment + 1 .. alignment + mu].
  std::vector<Word> expected_window;
};

class UprimeBuilder {
 public:
  // Throws std::invalid_argument when BuildR would.
  UprimeBuilder(const VectorMultiset& V, std::uint64_t q);

  std::size_t rounds_done() const { return rounds_.size(); }
  bool done() const { return rounds_.size() == MaxRounds(V_.mu); }
  // Indices whose position in the next round is already occupied.
  std::vector<bool> BlockedForNextRound() const;
  // Throws std::invalid_argument when an index is out of range, a position
  // is blocked (including an index repeated within the round), more than mu
  // indices are given, or all rounds are used.
  void AddRound(const std::vector<std::size_t>& indices);

  const SymbolString& R() const { return R_; }
  SymbolString Uprime() const;
  const std::vector<PopulateRound>& rounds() const { return rounds_; }

 private:
  std::size_t Position(std::size_t round, std::size_t index) const;

  VectorMultiset V_;
  std::uint64_t q_;
  SymbolString R_;
  std::vector<Symbol> u_;
  std::vector<PopulateRound> rounds_;
};

struct PopulatedUprime {
  SymbolString uprime;
  std::vector<PopulateRound> rounds;
};

// Runs one round per entry of `choices`.
PopulatedUprime PopulateUprime(
    const VectorMultiset& V, std::uint64_t q,
    const std::vector<std::vector<std::size_t>>& choices);

enum class Provenance { kPopulate, kRandom };
std::string_view ProvenanceName(Provenance p);

struct FamilyMember {
  SymbolString uprime;
  std::vector<Word> ham_array;
  Provenance provenance = Provenance::kPopulate;
};

// Strings of length 2r with pairwise distinct HamArrays.
struct URFamily {
  std::vector<FamilyMember> members;
  std::uint64_t candidates = 0;
  std::map<std::vector<Word>, std::size_t> by_ham_array;

  std::size_t size() const { return members.size(); }
  std::optional<std::size_t> Find(const std::vector<Word>& ham_array) const;
  // Admits the candidate iff its HamArray is new; returns whether it did.
  bool Offer(const SymbolString& R, SymbolString uprime, Provenance p);
};

// Greedy family over `budget` candidates: the first half from randomized
// population runs (each round picks a random codeword of `code` whose
// positions are free, or else a random free subset of at most mu indices),
// the rest uniform over the construction symbols [mu^2] plus DIAMOND.
URFamily BuildURFamily(const VectorMultiset& V, std::uint64_t q,
                       std::uint64_t budget, std::uint64_t seed,
                       const CyclicCode* code = nullptr);

struct HammingConfig {
  unsigned mu = 2;
  unsigned gamma = 1;
  std::size_t n = 0;    // 0 selects MinimalHammingN
  std::uint64_t q = 0;  // 0 selects mu^2 + 2
  std::size_t multiset_trials = 8;
  std::uint64_t family_budget = 256;
  std::uint64_t seed = 0;
};

struct HammingInstance {
  unsigned mu = 0;
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t r = 0;
  VectorMultiset V;
  std::size_t sum_count = 0;  // |Sum(V)|
  std::optional<CyclicCode> code;
  SymbolString R;
  SymbolString F;
  std::vector<std::size_t> copy_starts;
  URFamily family;
};

// Throws std::invalid_argument on invalid parameters.
HammingInstance BuildHammingInstance(const HammingConfig& config);

struct HammingStream {
  SymbolString U;
  std::vector<std::size_t> draws;  // family index of each 2r block
};

// n / 2r independent uniform draws from the family, concatenated. Throws
// std::invalid_argument unless 2r divides n.
HammingStream SampleHammingStream(const HammingInstance& instance,
                                  std::size_t n, std::uint64_t seed);

}  // namespace streamlab::instances

#endif  // STREAMLAB_INSTANCES_HAMMING_H_
