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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "streamlab/core/rng.h"
#include "streamlab/engines/offline.h"
#include "streamlab/engines/processor.h"

namespace streamlab::engines {
namespace {

std::vector<Word> RandomWords(std::size_t n, Word q, Rng& rng) {
  std::vector<Word> v(n);
  for (Word& x : v) x = rng.Uniform(q);
  return v;
}

std::vector<Word> DirectConvolution(const std::vector<Word>& a,
                                    const std::vector<Word>& b, Word q) {
  std::vector<oracle::BigInt> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += oracle::BigInt(a[i]) * b[j];
    }
  }
  std::vector<Word> out;
  for (const auto& x : acc) out.push_back(static_cast<Word>(x % q));
  return out;
}

TEST(OfflineTest, KernelsMatchDirectConvolution) {
  Rng rng(11);
  for (Word q : {Word{2}, Word{5}, Word{998244353}, Word{1000000007},
                 (Word{1} << 40) + 15}) {
    for (std::size_t len : {1u, 7u, 33u, 200u}) {
      const auto a = RandomWords(len, q, rng);
      const auto b = RandomWords(len + 3, q, rng);
      const auto want = DirectConvolution(a, b, q);
      EXPECT_EQ(NaiveConvolve(a, b, q), want) << q << ' ' << len;
      EXPECT_EQ(OfflineConvolve(a, b, q), want) << q << ' ' << len;
    }
  }
}

TEST(OfflineTest, NttPathUsedForFriendlyPrime) {
  Rng rng(3);
  const Word q = 998244353;
  const auto a = RandomWords(64, q, rng);
  KernelStats stats;
  const auto got = OfflineConvolve(a, a, q, &stats);
  EXPECT_TRUE(NttFriendly(q, 127));
  EXPECT_EQ(stats.calls_of(KernelKind::kNttConv), 1u);
  EXPECT_EQ(got, DirectConvolution(a, a, q));
}

TEST(OfflineTest, SchoolbookMatchesBigInt) {
  Rng rng(5);
  for (Word q : {Word{2}, Word{10}, Word{16}}) {
    const auto a = RandomWords(20, q, rng);
    const auto b = RandomWords(13, q, rng);
    const auto p = SchoolbookMultiply(a, b, q);
    ASSERT_EQ(p.size(), 33u);
    std::vector<std::uint32_t> a32(a.begin(), a.end()), b32(b.begin(), b.end()),
        p32(p.begin(), p.end());
    EXPECT_EQ(oracle::FromDigits(p32, q),
              oracle::FromDigits(a32, q) * oracle::FromDigits(b32, q));
  }
}

TEST(OfflineTest, WideExactConvolutionMatchesBigInt) {
  Rng rng(13);
  for (Word q : {Word{7}, Word{998244353}, (Word{1} << 40) + 15,
                 (Word{1} << 56) + 5}) {
    for (std::size_t len : {5u, 64u, 300u}) {
      const auto a = RandomWords(len, q, rng);
      const auto b = RandomWords(len, q, rng);
      const auto got = ExactConvolveWide(a, b);
      ASSERT_EQ(got.size(), 2 * len - 1);
      for (std::size_t k = 0; k < got.size(); ++k) {
        oracle::BigInt want = 0;
        for (std::size_t i = 0; i < len; ++i) {
          if (k >= i && k - i < len) want += oracle::BigInt(a[i]) * b[k - i];
        }
        const oracle::BigInt have =
            (oracle::BigInt(static_cast<std::uint64_t>(got[k] >> 64)) << 64) +
            static_cast<std::uint64_t>(got[k]);
        ASSERT_EQ(have, want) << q << ' ' << len << ' ' << k;
      }
    }
  }
}

TEST(OfflineTest, MatchCountsByDefinition) {
  const std::vector<Symbol> block = {0, 1, 2, 1};
  const std::vector<Symbol> seg = {1, 1, 0};
  const auto got = MatchCounts(block, seg);
  std::vector<Word> want(block.size() + seg.size() - 1, 0);
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = 0; j < seg.size(); ++j) {
      want[i + j] += block[i] == seg[j];
    }
  }
  EXPECT_EQ(got, want);
}

struct Case {
  Problem problem;
  Algorithm algorithm;
};

class ProcessorTest : public ::testing::TestWithParam<Case> {};

TEST_P(ProcessorTest, MatchesOracle) {
  const Case c = GetParam();
  Rng rng(17);
  for (std::size_t n : {2u, 4u, 16u, 64u, 256u}) {
    for (std::uint64_t q : {2u, 3u, 7u, 10u}) {
      std::vector<std::uint32_t> f(n), u(n);
      for (auto& x : f) x = static_cast<std::uint32_t>(rng.Uniform(q));
      const std::uint64_t ub = c.problem == Problem::kHamming ? q - 1 : q;
      for (auto& x : u) x = static_cast<std::uint32_t>(rng.Uniform(ub));
      const SymbolString F(q, f), U(q, u);
      const auto proc = MakeProcessor(c.problem, c.algorithm, F,
                                      Params::Create(n, q));
      probelab::CellStore store(64);
      const OutputArray got = RunStream(*proc, store, U);
      std::vector<std::uint64_t> want;
      switch (c.problem) {
        case Problem::kConvolution:
          want = oracle::Convolution(f, u, q);
          break;
        case Problem::kMultiplication:
          want = oracle::Multiplication(f, u, q);
          break;
        case Problem::kHamming:
          want = oracle::Hamming(f, u);
          break;
      }
      EXPECT_EQ(got, want) << "n=" << n << " q=" << q;
      EXPECT_EQ(ReferenceOutputs(c.problem, F, U), want);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    All, ProcessorTest,
    ::testing::Values(Case{Problem::kConvolution, Algorithm::kNaive},
                      Case{Problem::kConvolution, Algorithm::kFast},
                      Case{Problem::kMultiplication, Algorithm::kNaive},
                      Case{Problem::kMultiplication, Algorithm::kFast},
                      Case{Problem::kHamming, Algorithm::kNaive},
                      Case{Problem::kHamming, Algorithm::kFast}));

TEST(ProcessorTest, LargeBaseMultiplication) {
  Rng rng(23);
  const std::size_t n = 256;
  for (std::uint64_t q : {std::uint64_t{998244353}, (std::uint64_t{1} << 40) + 15,
                          std::uint64_t{1} << 62}) {
    std::vector<std::uint32_t> f(n), u(n);
    // Symbols are 32-bit; digits are drawn near the top of what fits.
    const std::uint64_t top = std::min<std::uint64_t>(q, std::uint64_t{1} << 32);
    for (auto& x : f) x = static_cast<std::uint32_t>(top - 1 - rng.Uniform(1u << 20));
    for (auto& x : u) x = static_cast<std::uint32_t>(top - 1 - rng.Uniform(1u << 20));
    const SymbolString F(q, f), U(q, u);
    const auto want = oracle::Multiplication(f, u, q);
    for (Algorithm a : {Algorithm::kNaive, Algorithm::kFast}) {
      const auto proc = MakeProcessor(Problem::kMultiplication, a, F,
                                      Params::Create(n, q));
      probelab::CellStore store(64);
      EXPECT_EQ(RunStream(*proc, store, U), want)
          << q << ' ' << AlgorithmName(a);
    }
  }
}

TEST(ProcessorContractTest, RejectsExtraArrival) {
  const SymbolString F(3, {1, 2, 0, 1});
  const auto proc = MakeProcessor(Problem::kConvolution, Algorithm::kFast, F,
                                  Params::Create(4, 3));
  probelab::CellStore store(64);
  for (int i = 0; i < 4; ++i) proc->Update(store, 1);
  EXPECT_THROW(proc->Update(store, 1), std::out_of_range);
}

TEST(ProcessorContractTest, RejectsStarInHammingStream) {
  const SymbolString F(4, {3, 1, 0, 2});
  const auto proc = MakeProcessor(Problem::kHamming, Algorithm::kNaive, F,
                                  Params::Create(4, 4));
  probelab::CellStore store(64);
  EXPECT_THROW(proc->Update(store, StarSymbol(4)), std::invalid_argument);
  EXPECT_NO_THROW(proc->Update(store, DiamondSymbol(4)));
}

TEST(ProcessorContractTest, RejectsNarrowStore) {
  const SymbolString F(5, std::vector<Symbol>(64, 1));
  const auto proc = MakeProcessor(Problem::kConvolution, Algorithm::kNaive, F,
                                  Params::Create(64, 5));
  probelab::CellStore narrow(proc->required_width() - 1);
  EXPECT_THROW(proc->Update(narrow, 1), std::invalid_argument);
  EXPECT_THROW(MakeProcessor(Problem::kConvolution, Algorithm::kNaive, F,
                             Params::Create(64, 5, 4)),
               std::invalid_argument);
}

TEST(ProcessorContractTest, StateLivesInStore) {
  Rng rng(2);
  std::vector<Symbol> f(32), u(32);
  for (auto& x : f) x = static_cast<Symbol>(rng.Uniform(5));
  for (auto& x : u) x = static_cast<Symbol>(rng.Uniform(5));
  const SymbolString F(5, f), U(5, u);
  const auto proc = MakeProcessor(Problem::kConvolution, Algorithm::kFast, F,
                                  Params::Create(32, 5));
  // Two interleaved stores must not interfere.
  probelab::CellStore s1(64), s2(64);
  OutputArray a1, a2;
  for (std::size_t t = 0; t < 32; ++t) {
    a1.push_back(proc->Update(s1, U[t]));
    a2.push_back(proc->Update(s2, U[t]));
  }
  EXPECT_EQ(a1, a2);
  EXPECT_EQ(a1, ReferenceOutputs(Problem::kConvolution, F, U));
}

TEST(ProcessorContractTest, SmallestBlockOption) {
  Rng rng(9);
  std::vector<Symbol> f(128), u(128);
  for (auto& x : f) x = static_cast<Symbol>(rng.Uniform(7));
  for (auto& x : u) x = static_cast<Symbol>(rng.Uniform(7));
  const SymbolString F(7, f), U(7, u);
  for (std::size_t b : {1u, 2u, 8u, 64u}) {
    const auto proc = MakeProcessor(Problem::kConvolution, Algorithm::kFast, F,
                                    Params::Create(128, 7), FastOptions{b});
    probelab::CellStore store(64);
    EXPECT_EQ(RunStream(*proc, store, U),
              ReferenceOutputs(Problem::kConvolution, F, U))
        << b;
  }
}

TEST(ProblemNamesTest, RoundTrip) {
  for (Problem p : {Problem::kConvolution, Problem::kMultiplication,
                    Problem::kHamming}) {
    EXPECT_EQ(ParseProblem(ProblemName(p)), p);
  }
  EXPECT_EQ(ParseAlgorithm("fast"), Algorithm::kFast);
  EXPECT_THROW(ParseProblem("nope"), std::invalid_argument);
}

}  // namespace
}  // namespace streamlab::engines
