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

#include "streamlab/instances/hamming.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "streamlab/core/rng.h"

namespace streamlab::instances {
namespace {

std::size_t Cube(std::size_t mu) { return mu * mu * mu; }

bool CodeUsable(unsigned mu, unsigned gamma) {
  if (mu < 4 || mu * (mu - 1) > 36) return false;
  if (gamma % 2 == 0 || gamma >= mu) return false;
  for (unsigned d = 2; d * d <= mu - 1; ++d) {
    if ((mu - 1) % d == 0) return false;
  }
  return true;
}

}  // namespace

SymbolString BuildR(const VectorMultiset& V, std::uint64_t q) {
  const std::size_t mu = V.mu;
  if (mu < 1) throw std::invalid_argument("mu must be >= 1");
  if (V.size() > mu * mu) {
    throw std::invalid_argument("|V| exceeds mu^2 blocks");
  }
  if (q < mu * mu + 2) {
    throw std::invalid_argument("alphabet q = " + std::to_string(q) +
                                " is below mu^2 + 2 = " +
                                std::to_string(mu * mu + 2));
  }
  const Symbol star = StarSymbol(q);
  std::vector<Symbol> data(Cube(mu), star);
  for (std::size_t i = 0; i < V.size(); ++i) {
    for (std::size_t j = 0; j < mu; ++j) {
      if (V.vectors[i][j]) data[i * mu + j] = static_cast<Symbol>(i);
    }
  }
  return SymbolString(q, std::move(data));
}

std::vector<Word> HamArray(const SymbolString& R, const SymbolString& U) {
  if (U.size() < R.size()) {
    throw std::invalid_argument("HamArray needs |U| >= |R|");
  }
  std::vector<Word> out(U.size() - R.size() + 1, 0);
  for (std::size_t a = 0; a < out.size(); ++a) {
    Word d = 0;
    for (std::size_t i = 0; i < R.size(); ++i) d += R[i] != U[a + i] ? 1 : 0;
    out[a] = d;
  }
  return out;
}

std::vector<std::size_t> CopyStarts(std::size_t n, std::size_t r) {
  std::vector<std::size_t> starts;
  for (std::size_t p = 1; p <= n - 1; p <<= 1) {
    if (p >= r) starts.push_back(n - 1 - p);
  }
  std::sort(starts.begin(), starts.end());
  return starts;
}

SymbolString BuildHammingF(const SymbolString& R, std::size_t n) {
  const std::size_t r = R.size();
  if (r == 0) throw std::invalid_argument("R must be non-empty");
  if (!IsPowerOfTwo(n)) {
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " is not a power of two");
  }
  if (n < r * r) {
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " is below r^2 = " + std::to_string(r * r));
  }
  if (n % (2 * r) != 0) {
    throw std::invalid_argument("2r = " + std::to_string(2 * r) +
                                " does not divide n = " + std::to_string(n));
  }
  const std::uint64_t q = R.alphabet();
  std::vector<Symbol> data(n, StarSymbol(q));
  for (std::size_t start : CopyStarts(n, r)) {
    std::copy(R.data().begin(), R.data().end(), data.begin() + start);
  }
  return SymbolString(q, std::move(data));
}

std::size_t MinimalHammingN(std::size_t r) {
  std::size_t n = 1;
  while (n < r * r || n % (2 * r) != 0) n <<= 1;
  return n;
}

std::size_t RoundsPerPhase(unsigned mu) {
  return std::max<std::size_t>(1, (mu - 1) / 64);
}

std::size_t MaxRounds(unsigned mu) { return mu * RoundsPerPhase(mu); }

std::size_t RoundAlignment(unsigned mu, std::size_t round) {
  const std::size_t per = RoundsPerPhase(mu);
  const std::size_t phase = round / per;
  const std::size_t sub = round % per;
  return phase * (per * mu + 1) + sub * mu;
}

UprimeBuilder::UprimeBuilder(const VectorMultiset& V, std::uint64_t q)
    : V_(V),
      q_(q),
      R_(BuildR(V, q)),
      u_(2 * Cube(V.mu), DiamondSymbol(q)) {}

std::size_t UprimeBuilder::Position(std::size_t round,
                                    std::size_t index) const {
  return RoundAlignment(V_.mu, round) + (index + 1) * V_.mu;
}

std::vector<bool> UprimeBuilder::BlockedForNextRound() const {
  std::vector<bool> blocked(V_.size(), true);
  if (done()) return blocked;
  for (std::size_t i = 0; i < V_.size(); ++i) {
    blocked[i] = u_[Position(rounds_.size(), i)] != DiamondSymbol(q_);
  }
  return blocked;
}

void UprimeBuilder::AddRound(const std::vector<std::size_t>& indices) {
  if (done()) throw std::invalid_argument("all rounds are used");
  if (indices.size() > V_.mu) {
    throw std::invalid_argument("a round takes at most mu vectors");
  }
  const std::size_t round = rounds_.size();
  for (std::size_t i : indices) {
    if (i >= V_.size()) throw std::invalid_argument("vector index too large");
  }
  std::vector<Symbol> next = u_;
  for (std::size_t i : indices) {
    const std::size_t pos = Position(round, i);
    if (next[pos] != DiamondSymbol(q_)) {
      throw std::invalid_argument("round " + std::to_string(round) +
                                  ": position of vector " + std::to_string(i) +
                                  " is blocked");
    }
    next[pos] = static_cast<Symbol>(i);
  }
  u_ = std::move(next);
  PopulateRound pr;
  pr.alignment = RoundAlignment(V_.mu, round);
  pr.indices = indices;
  pr.sum.assign(V_.mu, 0);
  for (std::size_t i : indices) {
    for (std::size_t j = 0; j < V_.mu; ++j) pr.sum[j] += V_.vectors[i][j];
  }
  const Word r = Cube(V_.mu);
  for (std::size_t m = 1; m <= V_.mu; ++m) {
    pr.expected_window.push_back(r - pr.sum[V_.mu - m]);
  }
  rounds_.push_back(std::move(pr));
}

SymbolString UprimeBuilder::Uprime() const { return SymbolString(q_, u_); }

PopulatedUprime PopulateUprime(
    const VectorMultiset& V, std::uint64_t q,
    const std::vector<std::vector<std::size_t>>& choices) {
  UprimeBuilder builder(V, q);
  for (const auto& choice : choices) builder.AddRound(choice);
  return {builder.Uprime(), builder.rounds()};
}

std::string_view ProvenanceName(Provenance p) {
  return p == Provenance::kPopulate ? "populate" : "random";
}

std::optional<std::size_t> URFamily::Find(
    const std::vector<Word>& ham_array) const {
  auto it = by_ham_array.find(ham_array);
  if (it == by_ham_array.end()) return std::nullopt;
  return it->second;
}

bool URFamily::Offer(const SymbolString& R, SymbolString uprime,
                     Provenance p) {
  ++candidates;
  std::vector<Word> ham = HamArray(R, uprime);
  if (by_ham_array.count(ham) != 0) return false;
  by_ham_array.emplace(ham, members.size());
  members.push_back({std::move(uprime), std::move(ham), p});
  return true;
}

URFamily BuildURFamily(const VectorMultiset& V, std::uint64_t q,
                       std::uint64_t budget, std::uint64_t seed,
                       const CyclicCode* code) {
  Rng rng = Rng::Substream(seed, "ur_family");
  const SymbolString R = BuildR(V, q);
  URFamily family;
  const std::uint64_t populate_budget = (budget + 1) / 2;
  for (std::uint64_t c = 0; c < populate_budget; ++c) {
    UprimeBuilder builder(V, q);
    while (!builder.done()) {
      const std::vector<bool> blocked = builder.BlockedForNextRound();
      std::vector<std::size_t> choice;
      if (code != nullptr && !code->words.empty() && rng.Coin()) {
        std::vector<std::uint64_t> free_words;
        for (std::uint64_t w : code->words) {
          bool ok = true;
          for (std::size_t i = 0; i < V.size() && ok; ++i) {
            if (((w >> i) & 1) && blocked[i]) ok = false;
          }
          if (ok) free_words.push_back(w);
        }
        if (!free_words.empty()) {
          const std::uint64_t w = free_words[rng.Uniform(free_words.size())];
          for (std::size_t i = 0; i < V.size(); ++i) {
            if ((w >> i) & 1) choice.push_back(i);
          }
        }
      }
      if (choice.empty()) {
        std::vector<std::size_t> pool;
        for (std::size_t i = 0; i < V.size(); ++i) {
          if (!blocked[i]) pool.push_back(i);
        }
        const std::size_t take =
            rng.Uniform(std::min<std::size_t>(V.mu, pool.size()) + 1);
        for (std::size_t k = 0; k < take; ++k) {
          const std::size_t pick = k + rng.Uniform(pool.size() - k);
          std::swap(pool[k], pool[pick]);
          choice.push_back(pool[k]);
        }
        std::sort(choice.begin(), choice.end());
      }
      builder.AddRound(choice);
    }
    family.Offer(R, builder.Uprime(), Provenance::kPopulate);
  }
  const std::size_t symbols = static_cast<std::size_t>(V.mu) * V.mu;
  std::vector<Symbol> u(2 * R.size());
  for (std::uint64_t c = populate_budget; c < budget; ++c) {
    for (Symbol& x : u) {
      const std::uint64_t k = rng.Uniform(symbols + 1);
      x = k == symbols ? DiamondSymbol(q) : static_cast<Symbol>(k);
    }
    family.Offer(R, SymbolString(q, u), Provenance::kRandom);
  }
  return family;
}

HammingInstance BuildHammingInstance(const HammingConfig& config) {
  const unsigned mu = config.mu;
  if (mu < 2) throw std::invalid_argument("mu must be >= 2");
  HammingInstance inst;
  inst.mu = mu;
  inst.q = config.q == 0 ? std::uint64_t{mu} * mu + 2 : config.q;
  if (inst.q < std::uint64_t{mu} * mu + 2) {
    throw std::invalid_argument("hamming instances need q >= mu^2 + 2");
  }
  inst.r = Cube(mu);
  inst.n = config.n == 0 ? MinimalHammingN(inst.r) : config.n;
  MultisetSearch search =
      SearchVectorMultiset(mu, config.multiset_trials, config.seed);
  inst.V = std::move(search.best);
  inst.sum_count = search.best_sum_count;
  if (CodeUsable(mu, config.gamma)) {
    inst.code = SearchCyclicCode(mu, config.gamma);
  }
  inst.R = BuildR(inst.V, inst.q);
  inst.F = BuildHammingF(inst.R, inst.n);
  inst.copy_starts = CopyStarts(inst.n, inst.r);
  inst.family =
      BuildURFamily(inst.V, inst.q, config.family_budget, config.seed,
                    inst.code ? &*inst.code : nullptr);
  return inst;
}

HammingStream SampleHammingStream(const HammingInstance& instance,
                                  std::size_t n, std::uint64_t seed) {
  const std::size_t block = 2 * instance.r;
  if (block == 0 || n % block != 0) {
    throw std::invalid_argument("2r = " + std::to_string(block) +
                                " does not divide n = " + std::to_string(n));
  }
  if (instance.family.size() == 0) {
    throw std::invalid_argument("empty string family");
  }
  Rng rng = Rng::Substream(seed, "hamming_stream");
  HammingStream out;
  std::vector<Symbol> data;
  data.reserve(n);
  for (std::size_t b = 0; b < n / block; ++b) {
    const std::size_t k = rng.Uniform(instance.family.size());
    out.draws.push_back(k);
    const auto& u = instance.family.members[k].uprime.data();
    data.insert(data.end(), u.begin(), u.end());
  }
  out.U = SymbolString(instance.q, std::move(data));
  return out;
}

}  // namespace streamlab::instances
