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

#include "streamlab/probelab/encoding.h"

#include <algorithm>
#include <map>
#include <optional>

#include "streamlab/probelab/cell_store.h"
#include "streamlab/probelab/info_transfer.h"

namespace streamlab::probelab {
namespace {

ProbeTrace RecordRun(const engines::OnlineProcessor& processor,
                     const SymbolString& U) {
  CellStore store(processor.params().w);
  TraceRecorder recorder;
  store.AddSink(&recorder);
  engines::RunStream(processor, store, U);
  return recorder.Take();
}

ProbeTrace RecordTwice(const engines::OnlineProcessor& processor,
                       const SymbolString& U) {
  ProbeTrace first = RecordRun(processor, U);
  const ProbeTrace second = RecordRun(processor, U);
  if (first.events != second.events) {
    throw std::logic_error("processor is not deterministic: two runs on the "
                           "same input produced different traces");
  }
  return first;
}

IvEncoding BuildEncoding(const InfoTransferTree& tree, const ProbeTrace& trace,
                         std::size_t node_id, unsigned w) {
  const NodeTransfer& nt = tree.node(node_id);
  const CellSnapshot memory = ReplayTrace(trace, nt.window.t1);
  IvEncoding enc{node_id, w, {}};
  for (Address addr : nt.written_read_cells) {
    auto it = std::lower_bound(
        memory.begin(), memory.end(), addr,
        [](const std::pair<Address, Word>& c, Address a) { return c.first < a; });
    enc.entries.emplace_back(
        addr, it != memory.end() && it->first == addr ? it->second : 0);
  }
  return enc;
}

// Compares the replay's probes with the recorded ones for the same epochs.
class TruthChecker : public ProbeSink {
 public:
  TruthChecker(const ProbeTrace& truth, Epoch first, Epoch last)
      : truth_(truth) {
    auto by_epoch = [](const ProbeEvent& ev, Epoch e) { return ev.epoch < e; };
    next_ = std::lower_bound(truth.events.begin(), truth.events.end(), first,
                             by_epoch) -
            truth.events.begin();
    end_ = std::lower_bound(truth.events.begin(), truth.events.end(), last + 1,
                            by_epoch) -
           truth.events.begin();
  }

  void OnProbe(const ProbeEvent& event) override {
    if (next_ >= end_) {
      throw DecodeError("decoder made more probes than the true run at epoch " +
                        std::to_string(event.epoch));
    }
    const ProbeEvent& expected = truth_.events[next_++];
    if (!(expected == event)) {
      throw DecodeError(
          "decoder diverged at epoch " + std::to_string(event.epoch) +
          ": expected " + (expected.op == ProbeOp::kRead ? "read" : "write") +
          " of cell " + std::to_string(expected.addr) + " = " +
          std::to_string(expected.value) + ", got " +
          (event.op == ProbeOp::kRead ? "read" : "write") + " of cell " +
          std::to_string(event.addr) + " = " + std::to_string(event.value));
    }
  }

  void Finish() const {
    if (next_ != end_) {
      throw DecodeError("decoder made fewer probes than the true run");
    }
  }

 private:
  const ProbeTrace& truth_;
  std::size_t next_ = 0;
  std::size_t end_ = 0;
};

}  // namespace

IvEncoding EncodeAv(const engines::OnlineProcessor& processor,
                    const SymbolString& U, std::size_t node_id) {
  const std::size_t n = processor.params().n;
  if (node_id == 0 || node_id >= n) {
    throw std::out_of_range("node id " + std::to_string(node_id) +
                            " is not an internal node");
  }
  const ProbeTrace trace = RecordTwice(processor, U);
  const InfoTransferTree tree = ComputeInfoTransfer(trace, n, true);
  return BuildEncoding(tree, trace, node_id, processor.params().w);
}

std::vector<IvEncoding> EncodeAllNodes(
    const engines::OnlineProcessor& processor, const SymbolString& U) {
  const std::size_t n = processor.params().n;
  const ProbeTrace trace = RecordTwice(processor, U);
  const InfoTransferTree tree = ComputeInfoTransfer(trace, n, true);
  std::vector<IvEncoding> out;
  out.reserve(n - 1);
  for (std::size_t id = 1; id < n; ++id) {
    out.push_back(BuildEncoding(tree, trace, id, processor.params().w));
  }
  return out;
}

OutputArray DecodeAv(const engines::OnlineProcessor& processor,
                     const SymbolString& masked, const IvEncoding& encoding,
                     const ProbeTrace* truth) {
  const std::size_t n = processor.params().n;
  const unsigned w = processor.params().w;
  if (masked.size() != n) {
    throw std::invalid_argument("decoder input must have length n");
  }
  const ArrivalWindow v = TreeNode(n, encoding.node_id);

  CellStore before(w);
  engines::RunStream(processor, before, masked.Substr(0, v.t0));

  const std::map<Address, Word> shipped(encoding.entries.begin(),
                                        encoding.entries.end());
  CellStore replay(w);
  replay.SetFallback([&](Address addr) {
    auto it = shipped.find(addr);
    return it != shipped.end() ? it->second : before.Peek(addr);
  });
  std::optional<TruthChecker> checker;
  if (truth != nullptr) {
    checker.emplace(*truth, v.t1 + 1, v.t2);
    replay.AddSink(&*checker);
  }
  OutputArray out = engines::RunStream(
      processor, replay, masked.Substr(v.t1 + 1, v.half()), v.t1 + 1);
  if (checker) checker->Finish();
  return out;
}

}  // namespace streamlab::probelab
