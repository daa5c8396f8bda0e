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

#ifndef STREAMLAB_CORE_WINDOW_H_
#define STREAMLAB_CORE_WINDOW_H_

#include <cstddef>
#include <vector>

#include "streamlab/core/symbols.h"

namespace streamlab {

// A node of the information-transfer tree: the left interval [t0, t1] carries
// U_v, the right interval [t1 + 1, t2] produces A_v.
//
// Node ids use heap numbering over n leaves: the root is 1, the children of
// node i are 2i and 2i + 1, internal nodes are 1 .. n - 1. Windows built with
// Span() that do not belong to a tree carry node_id 0.
struct ArrivalWindow {
  std::size_t node_id = 0;
  std::size_t t0 = 0;
  std::size_t t1 = 0;
  std::size_t t2 = 0;
  std::size_t ell = 0;

  std::size_t half() const { return ell / 2; }

  // Throws std::invalid_argument unless ell is a power of two >= 2.
  static ArrivalWindow Span(std::size_t t0, std::size_t ell,
                            std::size_t node_id = 0);

  friend bool operator==(const ArrivalWindow&, const ArrivalWindow&) = default;
};

ArrivalWindow TreeNode(std::size_t n, std::size_t node_id);
// All internal nodes in increasing id order (root first).
std::vector<ArrivalWindow> TreeNodes(std::size_t n);
// Id of the deepest node whose left interval holds a and right interval holds
// b. Requires a < b < n.
std::size_t SplitNode(std::size_t n, std::size_t a, std::size_t b);

// U[t0, t1]: the ell/2 symbols that arrive in the left interval.
SymbolString SliceUv(const SymbolString& U, const ArrivalWindow& v);
// A[t1 + 1, t2]: the ell/2 outputs of the right interval.
OutputArray SliceAv(const OutputArray& A, const ArrivalWindow& v);
// U[0, t0 - 1] followed by U[t2 + 1, n - 1]; length n - ell.
SymbolString ComplementUv(const SymbolString& U, const ArrivalWindow& v);
// U with U[t0, t1] overwritten by `fill`: every input a decoder may consult.
SymbolString MaskUv(const SymbolString& U, const ArrivalWindow& v, Symbol fill);

}  // namespace streamlab

#endif  // STREAMLAB_CORE_WINDOW_H_
