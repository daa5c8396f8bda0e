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

#include "streamlab/core/window.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace streamlab {
namespace {

void CheckInRange(std::size_t length, const ArrivalWindow& v) {
  if (v.t2 >= length) {
    throw std::out_of_range("window [" + std::to_string(v.t0) + ", " +
                            std::to_string(v.t2) + "] exceeds length " +
                            std::to_string(length));
  }
}

}  // namespace

ArrivalWindow ArrivalWindow::Span(std::size_t t0, std::size_t ell,
                                  std::size_t node_id) {
  if (ell < 2 || !IsPowerOfTwo(ell)) {
    throw std::invalid_argument("window length must be a power of two >= 2");
  }
  ArrivalWindow v;
  v.node_id = node_id;
  v.t0 = t0;
  v.ell = ell;
  v.t1 = t0 + ell / 2 - 1;
  v.t2 = t0 + ell - 1;
  return v;
}

ArrivalWindow TreeNode(std::size_t n, std::size_t node_id) {
  if (!IsPowerOfTwo(n) || n < 2) {
    throw std::invalid_argument("tree needs a power-of-two n >= 2");
  }
  if (node_id == 0 || node_id >= n) {
    throw std::out_of_range("node id " + std::to_string(node_id) +
                            " is not an internal node of a tree over " +
                            std::to_string(n) + " leaves");
  }
  const unsigned depth = FloorLog2(node_id);
  const std::size_t ell = n >> depth;
  const std::size_t index = node_id - (std::size_t{1} << depth);
  return ArrivalWindow::Span(index * ell, ell, node_id);
}

std::vector<ArrivalWindow> TreeNodes(std::size_t n) {
  std::vector<ArrivalWindow> nodes;
  if (n < 2) return nodes;
  nodes.reserve(n - 1);
  for (std::size_t id = 1; id < n; ++id) nodes.push_back(TreeNode(n, id));
  return nodes;
}

std::size_t SplitNode(std::size_t n, std::size_t a, std::size_t b) {
  const unsigned level = static_cast<unsigned>(std::bit_width(a ^ b));
  return (n >> level) + (a >> level);
}

SymbolString SliceUv(const SymbolString& U, const ArrivalWindow& v) {
  CheckInRange(U.size(), v);
  return U.Substr(v.t0, v.half());
}

OutputArray SliceAv(const OutputArray& A, const ArrivalWindow& v) {
  CheckInRange(A.size(), v);
  return OutputArray(A.begin() + static_cast<std::ptrdiff_t>(v.t1 + 1),
                     A.begin() + static_cast<std::ptrdiff_t>(v.t2 + 1));
}

SymbolString ComplementUv(const SymbolString& U, const ArrivalWindow& v) {
  CheckInRange(U.size(), v);
  std::vector<Symbol> out;
  out.reserve(U.size() - v.ell);
  out.insert(out.end(), U.data().begin(),
             U.data().begin() + static_cast<std::ptrdiff_t>(v.t0));
  out.insert(out.end(), U.data().begin() + static_cast<std::ptrdiff_t>(v.t2 + 1),
             U.data().end());
  return SymbolString(U.alphabet(), std::move(out));
}

SymbolString MaskUv(const SymbolString& U, const ArrivalWindow& v,
                    Symbol fill) {
  CheckInRange(U.size(), v);
  std::vector<Symbol> out = U.data();
  for (std::size_t t = v.t0; t <= v.t1; ++t) out[t] = fill;
  return SymbolString(U.alphabet(), std::move(out));
}

}  // namespace streamlab
