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

#include "streamlab/probelab/cell_store.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace streamlab::probelab {

CellStore::CellStore(unsigned w)
    : w_(w), max_(w >= 64 ? ~Word{0} : (Word{1} << w) - 1) {
  if (w == 0 || w > 64) {
    throw std::invalid_argument("cell width must lie in [1, 64]");
  }
}

CellStore CellStore::FromSnapshot(unsigned w, const CellSnapshot& cells) {
  CellStore store(w);
  for (const auto& [addr, value] : cells) {
    store.CheckFits(addr, value);
    store.Store(addr, value);
  }
  return store;
}

void CellStore::CheckFits(Address addr, Word value) const {
  if (addr > max_) {
    throw std::out_of_range("address " + std::to_string(addr) +
                            " does not fit in " + std::to_string(w_) +
                            " bits");
  }
  if (value > max_) {
    throw std::out_of_range("value " + std::to_string(value) +
                            " does not fit in " + std::to_string(w_) +
                            " bits");
  }
}

void CellStore::Store(Address addr, Word value) {
  if (addr < kDenseLimit) {
    if (addr >= dense_.size()) {
      const std::size_t size = std::max<std::size_t>(
          static_cast<std::size_t>(addr) + 1, dense_.size() * 2);
      dense_.resize(size, 0);
      present_.resize(size, 0);
    }
    dense_[addr] = value;
    present_[addr] = 1;
  } else {
    sparse_[addr] = value;
  }
}

bool CellStore::Contains(Address addr) const {
  if (addr < kDenseLimit) return addr < present_.size() && present_[addr];
  return sparse_.contains(addr);
}

Word CellStore::Peek(Address addr) const {
  if (addr < kDenseLimit) return addr < dense_.size() ? dense_[addr] : 0;
  auto it = sparse_.find(addr);
  return it == sparse_.end() ? 0 : it->second;
}

void CellStore::Dispatch(ProbeOp op, Address addr, Word value) {
  const ProbeEvent event{epoch_, op, addr, value};
  for (ProbeSink* sink : sinks_) sink->OnProbe(event);
}

Word CellStore::Read(Address addr) {
  if (addr > max_) [[unlikely]] CheckFits(addr, 0);
  Word value;
  if (addr < present_.size() && present_[addr]) {
    value = dense_[addr];
  } else if (addr >= kDenseLimit && sparse_.contains(addr)) {
    value = sparse_.find(addr)->second;
  } else if (fallback_) {
    value = fallback_(addr);
    CheckFits(addr, value);
    Store(addr, value);
  } else {
    value = 0;
  }
  Emit(ProbeOp::kRead, addr, value);
  return value;
}

void CellStore::Write(Address addr, Word value) {
  if (addr > max_ || value > max_) [[unlikely]] CheckFits(addr, value);
  if (addr < present_.size()) {
    dense_[addr] = value;
    present_[addr] = 1;
  } else {
    Store(addr, value);
  }
  Emit(ProbeOp::kWrite, addr, value);
}

CellSnapshot CellStore::Snapshot() const {
  CellSnapshot out;
  for (std::size_t a = 0; a < present_.size(); ++a) {
    if (present_[a]) out.emplace_back(a, dense_[a]);
  }
  std::vector<std::pair<Address, Word>> sparse(sparse_.begin(), sparse_.end());
  std::sort(sparse.begin(), sparse.end());
  out.insert(out.end(), sparse.begin(), sparse.end());
  return out;
}

}  // namespace streamlab::probelab
