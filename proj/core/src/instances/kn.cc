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

#include "streamlab/instances/kn.h"

#include <algorithm>
#include <stdexcept>

namespace streamlab::instances {

SymbolString MakeKn(std::size_t n, std::uint64_t q) {
  if (n < 2) throw std::invalid_argument("K_n needs n >= 2");
  if (q < 2) throw std::invalid_argument("alphabet must have q >= 2");
  std::vector<Symbol> data(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    data[i] = IsPowerOfTwo(n - 1 - i) ? 1 : 0;
  }
  return SymbolString(q, std::move(data));
}

std::optional<std::uint64_t> BinaryNumber::ToUint64() const {
  std::uint64_t value = 0;
  for (std::size_t i = bits_.size(); i-- > 0;) {
    if (!bits_[i]) continue;
    if (i >= 64) return std::nullopt;
    value |= std::uint64_t{1} << i;
  }
  return value;
}

std::string BinaryNumber::ToDecimal() const {
  // Base 10^9 limbs, least significant first.
  std::vector<std::uint32_t> limbs{0};
  for (std::size_t i = bits_.size(); i-- > 0;) {
    std::uint64_t carry = bits_[i] ? 1 : 0;
    for (std::uint32_t& limb : limbs) {
      const std::uint64_t cur = std::uint64_t{limb} * 2 + carry;
      limb = static_cast<std::uint32_t>(cur % 1000000000u);
      carry = cur / 1000000000u;
    }
    if (carry > 0) limbs.push_back(static_cast<std::uint32_t>(carry));
  }
  std::string out = std::to_string(limbs.back());
  for (std::size_t i = limbs.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

std::string BinaryNumber::ToPowerOfTwoBase(unsigned k) const {
  if (k < 1 || k > 6) throw std::invalid_argument("base must be 2^1 .. 2^6");
  static constexpr char kDigits[] =
      "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ+/";
  std::string out;
  for (std::size_t pos = 0; pos < bits_.size(); pos += k) {
    unsigned digit = 0;
    for (unsigned b = 0; b < k && pos + b < bits_.size(); ++b) {
      digit |= (bits_[pos + b] ? 1u : 0u) << b;
    }
    out.push_back(kDigits[digit]);
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  if (out.empty()) out = "0";
  std::reverse(out.begin(), out.end());
  return out;
}

SymbolString BinaryNumber::Digits(std::uint64_t q, std::size_t n) const {
  if (!IsPowerOfTwo(q) || q < 2) {
    throw std::invalid_argument("digit base must be a power of two >= 2");
  }
  const unsigned k = FloorLog2(q);
  std::vector<Symbol> digits(n, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) continue;
    if (i / k >= n) {
      throw std::overflow_error("number does not fit in " + std::to_string(n) +
                                " digits");
    }
    digits[i / k] |= Symbol{1} << (i % k);
  }
  return SymbolString(q, std::move(digits));
}

BinaryNumber MakeKqn(std::uint64_t q, std::size_t n) {
  if (q < 2 || !IsPowerOfTwo(q)) {
    throw std::invalid_argument("K_{q,n} needs q a power of two >= 2");
  }
  if (n < 1) throw std::invalid_argument("K_{q,n} needs n >= 1");
  const std::size_t k = FloorLog2(q);
  if (n > (std::size_t{1} << 20) / k) {
    throw std::overflow_error("K_{q,n} longer than 2^20 bits");
  }
  const std::size_t bit_count = n * k;
  std::vector<bool> bits(bit_count, false);
  for (std::size_t i = 1; i < bit_count; i <<= 1) bits[i] = true;
  return BinaryNumber(std::move(bits));
}

SymbolString KqnDigits(std::uint64_t q, std::size_t n) {
  return MakeKqn(q, n).Digits(q, n);
}

}  // namespace streamlab::instances
