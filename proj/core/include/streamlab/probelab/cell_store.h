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

#ifndef STREAMLAB_PROBELAB_CELL_STORE_H_
#define STREAMLAB_PROBELAB_CELL_STORE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "streamlab/core/params.h"

namespace streamlab::probelab {

enum class ProbeOp : std::uint8_t { kRead, kWrite };

// One cell probe. `value` is the content of the cell after the probe: the
// value returned by a read, or the value stored by a write.
struct ProbeEvent {
  Epoch epoch = 0;
  ProbeOp op = ProbeOp::kRead;
  Address addr = 0;
  Word value = 0;

  friend bool operator==(const ProbeEvent&, const ProbeEvent&) = default;
};

class ProbeSink {
 public:
  virtual ~ProbeSink() = default;
  virtual void OnProbe(const ProbeEvent& event) = 0;
};

// Present cells as (address, value) pairs in increasing address order.
using CellSnapshot = std::vector<std::pair<Address, Word>>;

// External memory of w-bit cells. Cells never written read as zero. Every
// probe is stamped with the current epoch (the arrival being processed) and
// forwarded to the attached sinks, which are not owned.
class CellStore {
 public:
  explicit CellStore(unsigned w);

  static CellStore FromSnapshot(unsigned w, const CellSnapshot& cells);

  unsigned width() const { return w_; }
  Epoch epoch() const { return epoch_; }
  void set_epoch(Epoch e) { epoch_ = e; }

  // Both throw std::out_of_range when addr or value does not fit in w bits.
  Word Read(Address addr);
  void Write(Address addr, Word value);

  // Content without probing; no event, no fallback.
  Word Peek(Address addr) const;
  bool Contains(Address addr) const;

  // Supplies the content of cells this store has never held. The first read
  // of such a cell caches the supplied value, so later reads see it locally.
  void SetFallback(std::function<Word(Address)> fallback) {
    fallback_ = std::move(fallback);
  }

  void AddSink(ProbeSink* sink) { sinks_.push_back(sink); }
  void ClearSinks() { sinks_.clear(); }

  std::uint64_t probe_count() const { return probes_; }
  CellSnapshot Snapshot() const;

 private:
  static constexpr Address kDenseLimit = Address{1} << 22;

  void CheckFits(Address addr, Word value) const;
  void Store(Address addr, Word value);
  void Emit(ProbeOp op, Address addr, Word value) {
    ++probes_;
    if (!sinks_.empty()) Dispatch(op, addr, value);
  }
  void Dispatch(ProbeOp op, Address addr, Word value);

  unsigned w_;
  Word max_;
  Epoch epoch_ = 0;
  std::uint64_t probes_ = 0;
  std::vector<Word> dense_;
  std::vector<std::uint8_t> present_;
  std::unordered_map<Address, Word> sparse_;
  std::function<Word(Address)> fallback_;
  std::vector<ProbeSink*> sinks_;
};

// Counts probes per operation kind.
class ProbeCounter : public ProbeSink {
 public:
  void OnProbe(const ProbeEvent& event) override {
    ++(event.op == ProbeOp::kRead ? reads : writes);
  }
  std::uint64_t total() const { return reads + writes; }

  std::uint64_t reads = 0;
  std::uint64_t writes = 0;
};

}  // namespace streamlab::probelab

#endif  // STREAMLAB_PROBELAB_CELL_STORE_H_
