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

#ifndef STREAMLAB_PROBELAB_ENCODING_H_
#define STREAMLAB_PROBELAB_ENCODING_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "streamlab/core/symbols.h"
#include "streamlab/core/window.h"
#include "streamlab/engines/processor.h"
#include "streamlab/probelab/trace.h"

namespace streamlab::probelab {

// Cells written in the left interval of a node and read in its right
// interval, with their contents at the end of the left interval.
struct IvEncoding {
  std::size_t node_id = 0;
  unsigned w = 64;
  CellSnapshot entries;  // increasing, distinct addresses

  // One w-bit count header plus an address and a value per entry.
  std::uint64_t bit_size() const { return w + 2ull * w * entries.size(); }
};

// Raised when a decoding run diverges from the recorded true run.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs the processor on U twice and encodes node `node_id`. Throws
// std::logic_error if the two runs produce different traces.
IvEncoding EncodeAv(const engines::OnlineProcessor& processor,
                    const SymbolString& U, std::size_t node_id);

// Same, for every internal node from a single pair of runs.
std::vector<IvEncoding> EncodeAllNodes(
    const engines::OnlineProcessor& processor, const SymbolString& U);

// Recomputes A_v from `masked` (U with U_v overwritten; see MaskUv) and the
// encoding. Arrivals before t0 are simulated to obtain the memory at t0, the
// left interval is skipped, and the right interval is replayed with reads of
// cells not yet held locally answered by the encoding, then by that memory.
// With `truth`, every probe of the replay is compared to the recorded run and
// a DecodeError names the first divergence.
OutputArray DecodeAv(const engines::OnlineProcessor& processor,
                     const SymbolString& masked, const IvEncoding& encoding,
                     const ProbeTrace* truth = nullptr);

}  // namespace streamlab::probelab

#endif  // STREAMLAB_PROBELAB_ENCODING_H_
