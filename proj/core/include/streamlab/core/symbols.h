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

#ifndef STREAMLAB_CORE_SYMBOLS_H_
#define STREAMLAB_CORE_SYMBOLS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "streamlab/core/params.h"

namespace streamlab {

// The two reserved codes sit at the top of [q]. STAR only ever appears on the
// fixed side (it mismatches every stream symbol); DIAMOND only ever appears on
// the stream side (it mismatches every symbol of R).
inline Symbol StarSymbol(std::uint64_t q) { return static_cast<Symbol>(q - 1); }
inline Symbol DiamondSymbol(std::uint64_t q) {
  return static_cast<Symbol>(q - 2);
}

enum class Role { kFixed, kStream };

std::string_view RoleName(Role role);
Role ParseRole(std::string_view name);

// Immutable sequence of symbol codes over the alphabet [q].
class SymbolString {
 public:
  SymbolString() = default;
  // Throws std::invalid_argument if q < 2 or any code is >= q.
  SymbolString(std::uint64_t q, std::vector<Symbol> data);

  static SymbolString Filled(std::uint64_t q, std::size_t length,
                             Symbol symbol);

  std::uint64_t alphabet() const { return q_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  Symbol operator[](std::size_t i) const { return data_[i]; }
  std::span<const Symbol> view() const { return data_; }
  const std::vector<Symbol>& data() const { return data_; }

  // Copy of [pos, pos + len); throws std::out_of_range past the end.
  SymbolString Substr(std::size_t pos, std::size_t len) const;
  std::size_t Count(Symbol s) const;

  friend bool operator==(const SymbolString&, const SymbolString&) = default;

 private:
  std::uint64_t q_ = 2;
  std::vector<Symbol> data_;
};

// STAR absent from stream strings, DIAMOND absent from fixed strings.
bool SentinelsRespected(const SymbolString& s, Role role);

// Outputs of an online run, one per arrival: residues for convolution, base-q
// digits for multiplication, mismatch counts in [0, n] for Hamming distance.
using OutputArray = std::vector<Word>;

}  // namespace streamlab

#endif  // STREAMLAB_CORE_SYMBOLS_H_
