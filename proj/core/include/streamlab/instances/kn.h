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

#ifndef STREAMLAB_INSTANCES_KN_H_
#define STREAMLAB_INSTANCES_KN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "streamlab/core/symbols.h"

namespace streamlab::instances {

// K_n[i] = 1 iff n - 1 - i is a power of two, as symbols over [q].
// Throws std::invalid_argument for n < 2 or q < 2.
SymbolString MakeKn(std::size_t n, std::uint64_t q = 2);

// Non-negative integer held as its binary expansion, least significant first.
class BinaryNumber {
 public:
  BinaryNumber() = default;
  explicit BinaryNumber(std::vector<bool> bits) : bits_(std::move(bits)) {}

  const std::vector<bool>& bits() const { return bits_; }
  std::size_t bit_count() const { return bits_.size(); }

  std::optional<std::uint64_t> ToUint64() const;
  std::string ToDecimal() const;
  // Digits in base 2^k (k in 1..6), most significant first, lower-case hex
  // letters; no leading zeros.
  std::string ToPowerOfTwoBase(unsigned k) const;
  // n digits in base q = 2^k, least significant first.
  SymbolString Digits(std::uint64_t q, std::size_t n) const;

 private:
  std::vector<bool> bits_;
};

// K_{q,n}: bit i of the binary expansion is set iff i is a power of two, for
// i < n log2 q. Throws std::invalid_argument unless q is a power of two >= 2
// and n >= 1, std::overflow_error past 2^20 bits.
BinaryNumber MakeKqn(std::uint64_t q, std::size_t n);

// K_{q,n} as n base-q digits, least significant first; the fixed operand of
// the multiplication instances.
SymbolString KqnDigits(std::uint64_t q, std::size_t n);

}  // namespace streamlab::instances

#endif  // STREAMLAB_INSTANCES_KN_H_
