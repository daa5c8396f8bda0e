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

#include <set>
#include <stdexcept>

#include "gtest/gtest.h"
#include "oracles.h"
#include "streamlab/core/rng.h"
#include "streamlab/instances/cyclic_code.h"
#include "streamlab/instances/hamming.h"
#include "streamlab/instances/kn.h"
#include "streamlab/instances/toeplitz.h"
#include "streamlab/instances/vector_multiset.h"

namespace streamlab::instances {
namespace {

TEST(KnTest, MatchesOracleAndPopcount) {
  for (std::size_t n : {2u, 8u, 64u, 1000u}) {
    const SymbolString k = MakeKn(n);
    const auto want = oracle::Kn(n);
    ASSERT_EQ(k.size(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(k[i], want[i]);
  }
  EXPECT_EQ(MakeKn(64).Count(1), 6u);
  EXPECT_THROW(MakeKn(1), std::invalid_argument);
}

TEST(KqnTest, ValuesMatchBigInt) {
  const BinaryNumber k = MakeKqn(16, 8);
  EXPECT_EQ(k.ToDecimal(), "65814");
  EXPECT_EQ(k.ToPowerOfTwoBase(4), "10116");
  for (std::uint64_t q : {2u, 4u, 16u, 64u}) {
    for (std::size_t n : {1u, 5u, 17u, 32u}) {
      const std::size_t bits = n * FloorLog2(q);
      const oracle::BigInt want = oracle::Kqn(bits);
      EXPECT_EQ(MakeKqn(q, n).ToDecimal(), want.str());
      EXPECT_EQ(MakeKqn(q, n).ToPowerOfTwoBase(4), oracle::ToBase(want, 16));
    }
  }
  const SymbolString d = KqnDigits(16, 8);
  std::vector<std::uint32_t> digits(d.data().begin(), d.data().end());
  EXPECT_EQ(oracle::FromDigits(digits, 16), 65814);
  EXPECT_THROW(MakeKqn(6, 4), std::invalid_argument);
}

TEST(ToeplitzTest, FractionMatchesDeterminantOracle) {
  for (auto [q, ell] : std::vector<std::pair<Word, std::size_t>>{
           {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 2}}) {
    const auto [good, total] = oracle::ToeplitzCounts(q, ell);
    EXPECT_EQ(ToeplitzNonsingularFraction(q, ell),
              Rational::Reduced(good, total))
        << q << ' ' << ell;
  }
  EXPECT_THROW(ToeplitzNonsingularFraction(4, 2), std::invalid_argument);
}

TEST(ToeplitzTest, BuildFromFixedString) {
  const SymbolString F(3, {0, 1, 2, 0, 1, 2, 2, 1});
  const ToeplitzMatrix m = BuildToeplitz(F, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(m.entry(i, j), F[8 - 1 - (3 + i) + j]);
    }
  }
  EXPECT_THROW(BuildToeplitz(F, 5), std::out_of_range);
}

TEST(CyclicCodeTest, SearchedCodesPassOracle) {
  for (unsigned mu : {4u, 6u}) {
    const CyclicCode code = SearchCyclicCode(mu, 1);
    EXPECT_TRUE(CheckCyclicCode(code).ok()) << CheckCyclicCode(code).Describe();
    EXPECT_TRUE(oracle::CheckCode(code.words, mu, 1).ok()) << mu;
  }
  EXPECT_EQ(WordToString(SearchCyclicCode(4, 1).words.front(), 12),
            "100100100100");
}

TEST(CyclicCodeTest, CheckerCatchesBrokenCode) {
  CyclicCode code = SearchCyclicCode(4, 1);
  code.words.pop_back();
  EXPECT_FALSE(CheckCyclicCode(code).cyclic);
  code.words = {0b111u};
  EXPECT_FALSE(CheckCyclicCode(code).constant_weight);
}

TEST(VectorMultisetTest, SearchIsReproducible) {
  const MultisetSearch a = SearchVectorMultiset(3, 6, 42);
  const MultisetSearch b = SearchVectorMultiset(3, 6, 42);
  EXPECT_EQ(a.best.vectors, b.best.vectors);
  EXPECT_EQ(a.best.size(), 6u);
  EXPECT_EQ(a.trial_sum_counts.size(), 6u);
  EXPECT_THROW(MakeVectorMultiset(2, {{1, 2}}), std::invalid_argument);
}

TEST(HammingTest, RAndCopies) {
  const VectorMultiset V = MakeVectorMultiset(2, {{1, 0}, {1, 1}});
  const SymbolString R = BuildR(V, 6);
  const Symbol s = StarSymbol(6);
  EXPECT_EQ(R, SymbolString(6, {0, s, 1, 1, s, s, s, s}));
  EXPECT_EQ(MinimalHammingN(8), 64u);
  EXPECT_EQ(CopyStarts(64, 8), (std::vector<std::size_t>{31, 47, 55}));
  const SymbolString F = BuildHammingF(R, 64);
  for (std::size_t start : CopyStarts(64, 8)) {
    EXPECT_EQ(F.Substr(start, 8), R);
  }
  EXPECT_EQ(F.Count(s), 64u - 3 * 3);
  EXPECT_THROW(BuildHammingF(R, 32), std::invalid_argument);
}

TEST(HammingTest, HamArrayMatchesOracle) {
  Rng rng(8);
  const VectorMultiset V = RandomVectorMultiset(3, rng);
  const SymbolString R = BuildR(V, 11);
  std::vector<Symbol> u(2 * R.size());
  for (auto& x : u) x = static_cast<Symbol>(rng.Uniform(10));
  const SymbolString U(11, u);
  const auto got = HamArray(R, U);
  const auto want = oracle::SlidingHamming(R.data(), U.data());
  EXPECT_EQ(std::vector<std::uint64_t>(got.begin(), got.end()), want);
  EXPECT_EQ(got.size(), R.size() + 1);
}

TEST(HammingTest, PopulateRejectsBlockedIndex) {
  const VectorMultiset V = MakeVectorMultiset(2, {{1, 0}, {0, 1}});
  UprimeBuilder b(V, 6);
  b.AddRound({0, 1});
  EXPECT_THROW(b.AddRound({0, 0}), std::invalid_argument);
}

TEST(HammingTest, FamilyHasDistinctHamArrays) {
  HammingConfig config;
  config.seed = 3;
  const HammingInstance inst = BuildHammingInstance(config);
  EXPECT_EQ(inst.n, 64u);
  EXPECT_EQ(inst.r, 8u);
  EXPECT_GT(inst.family.size(), 1u);
  std::set<std::vector<std::uint64_t>> seen;
  for (const FamilyMember& m : inst.family.members) {
    const auto h = oracle::SlidingHamming(inst.R.data(), m.uprime.data());
    EXPECT_TRUE(seen.insert(h).second);
    EXPECT_TRUE(SentinelsRespected(m.uprime, Role::kStream));
  }
  const HammingStream s = SampleHammingStream(inst, 64, 9);
  EXPECT_EQ(s.U.size(), 64u);
  EXPECT_EQ(s.draws.size(), 4u);
  for (std::size_t b = 0; b < 4; ++b) {
    EXPECT_EQ(s.U.Substr(16 * b, 16), inst.family.members[s.draws[b]].uprime);
  }
}

}  // namespace
}  // namespace streamlab::instances
