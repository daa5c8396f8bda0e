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

#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "streamlab/core/rng.h"
#include "streamlab/core/window.h"
#include "streamlab/engines/processor.h"
#include "streamlab/probelab/cell_store.h"
#include "streamlab/probelab/encoding.h"
#include "streamlab/probelab/info_transfer.h"
#include "streamlab/probelab/trace.h"

namespace streamlab::probelab {
namespace {

using engines::Algorithm;
using engines::Problem;

TEST(CellStoreTest, ReadsZeroAndChecksWidth) {
  CellStore store(8);
  EXPECT_EQ(store.Read(5), 0u);
  store.Write(5, 255);
  EXPECT_EQ(store.Read(5), 255u);
  EXPECT_THROW(store.Write(5, 256), std::out_of_range);
  EXPECT_THROW(store.Read(256), std::out_of_range);
  EXPECT_EQ(store.probe_count(), 3u);
}

TEST(CellStoreTest, FallbackIsCachedAndEventsCarryEpoch) {
  CellStore store(16);
  int calls = 0;
  store.SetFallback([&](Address a) {
    ++calls;
    return a + 1;
  });
  TraceRecorder rec;
  store.AddSink(&rec);
  store.set_epoch(3);
  EXPECT_EQ(store.Read(9), 10u);
  EXPECT_EQ(store.Read(9), 10u);
  EXPECT_EQ(calls, 1);
  ASSERT_EQ(rec.trace().size(), 2u);
  EXPECT_EQ(rec.trace().events[0],
            (ProbeEvent{3, ProbeOp::kRead, 9, 10}));
}

TEST(InfoTransferTest, TwoArrivalToyTrace) {
  // n = 2: cells 0 and 2 are written at epoch 0 and read at epoch 1; cell 1
  // is only touched at epoch 0.
  ProbeTrace trace;
  trace.events = {{0, ProbeOp::kRead, 0, 0},  {0, ProbeOp::kWrite, 0, 1},
                  {0, ProbeOp::kWrite, 1, 4}, {0, ProbeOp::kWrite, 2, 7},
                  {1, ProbeOp::kRead, 0, 1},  {1, ProbeOp::kRead, 2, 7}};
  const InfoTransferTree tree = ComputeInfoTransfer(trace, 2);
  EXPECT_EQ(tree.Size(1, TransferVariant::kProbedProbed), 2u);
  EXPECT_EQ(tree.Size(1, TransferVariant::kWrittenRead), 2u);
  EXPECT_EQ(tree.Cells(1, TransferVariant::kWrittenRead),
            (std::vector<Address>{0, 2}));
}

TEST(InfoTransferTest, RejectsMalformedTrace) {
  ProbeTrace trace;
  trace.events = {{1, ProbeOp::kRead, 0, 0}, {0, ProbeOp::kRead, 0, 0}};
  EXPECT_THROW(ComputeInfoTransfer(trace, 4), std::invalid_argument);
  EXPECT_FALSE(FindMalformation(trace, 4).empty());
  trace.events = {{4, ProbeOp::kRead, 0, 0}};
  EXPECT_THROW(ComputeInfoTransfer(trace, 4), std::invalid_argument);
}

ProbeTrace Record(Problem problem, Algorithm algo, std::size_t n,
                  std::uint64_t q, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Symbol> f(n), u(n);
  for (auto& x : f) x = static_cast<Symbol>(rng.Uniform(q));
  const std::uint64_t ub = problem == Problem::kHamming ? q - 1 : q;
  for (auto& x : u) x = static_cast<Symbol>(rng.Uniform(ub));
  const auto proc = engines::MakeProcessor(problem, algo, SymbolString(q, f),
                                           Params::Create(n, q));
  CellStore store(64);
  TraceRecorder rec;
  store.AddSink(&rec);
  engines::RunStream(*proc, store, SymbolString(q, u));
  return rec.Take();
}

TEST(InfoTransferTest, MatchesSetIntersectionOracle) {
  for (Problem p : {Problem::kConvolution, Problem::kMultiplication,
                    Problem::kHamming}) {
    for (Algorithm a : {Algorithm::kNaive, Algorithm::kFast}) {
      for (std::size_t n : {2u, 8u, 32u, 64u}) {
        const ProbeTrace trace = Record(p, a, n, 5, n);
        EXPECT_TRUE(FindMalformation(trace, n).empty());
        const InfoTransferTree tree = ComputeInfoTransfer(trace, n);
        std::uint64_t total = 0;
        for (const ArrivalWindow& v : TreeNodes(n)) {
          const oracle::NodeSets want =
              oracle::InformationTransfer(trace, v.t0, v.t1, v.t2);
          EXPECT_EQ(tree.Size(v.node_id, TransferVariant::kProbedProbed),
                    want.probed_probed)
              << engines::ProblemName(p) << " node " << v.node_id;
          EXPECT_EQ(tree.Size(v.node_id, TransferVariant::kWrittenRead),
                    want.written_read)
              << engines::ProblemName(p) << " node " << v.node_id;
          total += want.probed_probed;
        }
        EXPECT_LE(total, trace.size());
        EXPECT_EQ(SumInformationTransfer(tree, 2), total);
      }
    }
  }
}

TEST(InfoTransferTest, ProbedOnlyModeAgrees) {
  const ProbeTrace trace = Record(Problem::kConvolution, Algorithm::kFast,
                                  128, 7, 1);
  InfoTransferAccumulator acc(128, false, false);
  for (const ProbeEvent& e : trace.events) acc.OnProbe(e);
  const InfoTransferTree light = acc.Finish();
  const InfoTransferTree full = ComputeInfoTransfer(trace, 128, false);
  for (std::size_t id = 1; id < 128; ++id) {
    EXPECT_EQ(light.Size(id, TransferVariant::kProbedProbed),
              full.Size(id, TransferVariant::kProbedProbed));
    EXPECT_EQ(light.Size(id, TransferVariant::kWrittenRead), 0u);
  }
}

TEST(EncodingTest, RoundTripEveryNode) {
  Rng rng(4);
  const std::size_t n = 16;
  const std::uint64_t q = 5;
  for (Problem p : {Problem::kConvolution, Problem::kMultiplication,
                    Problem::kHamming}) {
    for (Algorithm a : {Algorithm::kNaive, Algorithm::kFast}) {
      std::vector<Symbol> f(n), u(n);
      for (auto& x : f) x = static_cast<Symbol>(rng.Uniform(q));
      for (auto& x : u) x = static_cast<Symbol>(rng.Uniform(q - 1));
      const SymbolString U(q, u);
      const auto proc = engines::MakeProcessor(p, a, SymbolString(q, f),
                                               Params::Create(n, q));
      const OutputArray A = engines::ReferenceOutputs(p, proc->fixed(), U);
      CellStore store(64);
      TraceRecorder rec;
      store.AddSink(&rec);
      engines::RunStream(*proc, store, U);
      const ProbeTrace truth = rec.Take();
      for (const IvEncoding& enc : EncodeAllNodes(*proc, U)) {
        const ArrivalWindow v = TreeNode(n, enc.node_id);
        EXPECT_EQ(DecodeAv(*proc, MaskUv(U, v, 0), enc, &truth), SliceAv(A, v))
            << engines::ProblemName(p) << ' ' << engines::AlgorithmName(a)
            << " node " << v.node_id;
        EXPECT_EQ(enc.bit_size(), 64u + 128u * enc.entries.size());
      }
    }
  }
}

TEST(EncodingTest, TamperedEncodingIsCaught) {
  const std::size_t n = 16;
  const SymbolString F(5, std::vector<Symbol>(n, 1));
  const SymbolString U(5, std::vector<Symbol>(n, 2));
  const auto proc = engines::MakeProcessor(
      Problem::kConvolution, Algorithm::kNaive, F, Params::Create(n, 5));
  CellStore store(64);
  TraceRecorder rec;
  store.AddSink(&rec);
  engines::RunStream(*proc, store, U);
  IvEncoding enc = EncodeAv(*proc, U, 1);
  ASSERT_FALSE(enc.entries.empty());
  enc.entries.front().second += 1;
  EXPECT_THROW(DecodeAv(*proc, MaskUv(U, TreeNode(n, 1), 0), enc,
                        &rec.trace()),
               DecodeError);
}

}  // namespace
}  // namespace streamlab::probelab
