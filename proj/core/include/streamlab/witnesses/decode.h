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

#ifndef STREAMLAB_WITNESSES_DECODE_H_
#define STREAMLAB_WITNESSES_DECODE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "streamlab/core/symbols.h"
#include "streamlab/core/window.h"
#include "streamlab/instances/hamming.h"

namespace streamlab::witnesses {

struct DecodeReport {
  std::size_t node_id = 0;
  std::string method;
  // Arrival index -> recovered symbol.
  std::map<std::size_t, Symbol> recovered;
  // Number of U_v candidates consistent with the outputs; 1 means unique.
  std::uint64_t ambiguity = 1;
  // Hamming decoding only: (block index in U, family member index).
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  bool ok = false;
  std::string detail;
};

// Every recovered symbol equals U at its index.
bool MatchesTruth(const DecodeReport& report, const SymbolString& U);

// All decoders take A_v and `masked`, the full input with U_v overwritten
// (MaskUv); the U_v positions of `masked` are ignored.

// F = K_n: A_v[i] minus the contribution of everything outside U_v equals
// U_v[i] for i in [ell/2, ell - 1], ell = ell_v / 2.
DecodeReport DecodeConvKn(const OutputArray& A_v, const ArrivalWindow& v,
                          const SymbolString& F, const SymbolString& masked);

// Solves M_{F,ell} U_v = A_v - (outside contribution) over Z/qZ, q prime.
// A singular system reports ambiguity q^(kernel dimension) and recovers
// nothing.
DecodeReport DecodeConvToeplitz(const OutputArray& A_v, const ArrivalWindow& v,
                                const SymbolString& F,
                                const SymbolString& masked);

// Recovers the family members drawn for the 2r-blocks lying in the second
// half of U_v from A_v minus a baseline run with U_v set to `placeholder`
// (DIAMOND when left at its default of q).
DecodeReport DecodeHammingBlocks(const OutputArray& A_v, const ArrivalWindow& v,
                                 const instances::HammingInstance& instance,
                                 const SymbolString& masked,
                                 Symbol placeholder = ~Symbol{0});

// Baseline outputs minus r for windows of node v; exposed for testing that
// they do not depend on the placeholder.
std::vector<std::int64_t> HammingBaselineOffsets(
    const ArrivalWindow& v, const instances::HammingInstance& instance,
    const SymbolString& masked, Symbol placeholder);

// CSV with header `node_id,method,recovered_count,ambiguity,ok`.
void WriteDecodeCsv(std::ostream& out, const std::vector<DecodeReport>& rows);

}  // namespace streamlab::witnesses

#endif  // STREAMLAB_WITNESSES_DECODE_H_
