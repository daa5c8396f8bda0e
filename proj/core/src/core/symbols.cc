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

#include "streamlab/core/symbols.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace streamlab {

std::string_view RoleName(Role role) {
  return role == Role::kFixed ? "fixed" : "stream";
}

Role ParseRole(std::string_view name) {
  if (name == "fixed") return Role::kFixed;
  if (name == "stream") return Role::kStream;
  throw std::invalid_argument("unknown role '" + std::string(name) + "'");
}

SymbolString::SymbolString(std::uint64_t q, std::vector<Symbol> data)
    : q_(q), data_(std::move(data)) {
  if (q_ < 2) throw std::invalid_argument("alphabet size must be >= 2");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] >= q_) {
      throw std::invalid_argument("symbol " + std::to_string(data_[i]) +
                                  " at position " + std::to_string(i) +
                                  " is outside [" + std::to_string(q_) + "]");
    }
  }
}

SymbolString SymbolString::Filled(std::uint64_t q, std::size_t length,
                                  Symbol symbol) {
  return SymbolString(q, std::vector<Symbol>(length, symbol));
}

SymbolString SymbolString::Substr(std::size_t pos, std::size_t len) const {
  if (pos > data_.size() || len > data_.size() - pos) {
    throw std::out_of_range("substring [" + std::to_string(pos) + ", " +
                            std::to_string(pos + len) + ") exceeds length " +
                            std::to_string(data_.size()));
  }
  SymbolString out;
  out.q_ = q_;
  out.data_.assign(data_.begin() + static_cast<std::ptrdiff_t>(pos),
                   data_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

std::size_t SymbolString::Count(Symbol s) const {
  return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), s));
}

bool SentinelsRespected(const SymbolString& s, Role role) {
  if (s.alphabet() < 3) {
    // With q == 2 the codes collide; only the STAR rule is checkable.
    return role == Role::kFixed || s.Count(StarSymbol(s.alphabet())) == 0;
  }
  const Symbol banned = role == Role::kStream ? StarSymbol(s.alphabet())
                                              : DiamondSymbol(s.alphabet());
  return s.Count(banned) == 0;
}

}  // namespace streamlab
