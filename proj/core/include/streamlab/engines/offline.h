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

#ifndef STREAMLAB_ENGINES_OFFLINE_H_
#define STREAMLAB_ENGINES_OFFLINE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "streamlab/core/params.h"

namespace streamlab::engines {

enum class KernelKind : std::size_t {
  kNaiveConv,
  kNttConv,       // number-theoretic transform directly modulo q
  kNttExact,      // integer convolution through NTTs over fixed large primes
  kSchoolbookMult,
  kHammingByConv,
};
inline constexpr std::size_t kKernelKinds = 5;

std::string_view KernelName(KernelKind kind);

// Counts kernel invocations and element multiplications (pairwise products
// for the direct kernels, butterfly plus pointwise products for transforms).
struct KernelStats {
  std::array<std::uint64_t, kKernelKinds> calls{};
  std::uint64_t multiplications = 0;

  void Record(KernelKind kind, std::uint64_t mults) {
    ++calls[static_cast<std::size_t>(kind)];
    multiplications += mults;
  }
  std::uint64_t calls_of(KernelKind kind) const {
    return calls[static_cast<std::size_t>(kind)];
  }
};

// Full linear convolution modulo q, |a| + |b| - 1 terms.
std::vector<Word> NaiveConvolve(std::span<const Word> a,
                                std::span<const Word> b, Word q,
                                KernelStats* stats = nullptr);

// True when q is a prime below 2^31 with q = 1 (mod 2L), L being the
// power-of-two transform size needed for a result of `result_len` terms.
bool NttFriendly(Word q, std::size_t result_len);

// Throws std::invalid_argument unless NttFriendly(q, |a| + |b| - 1).
std::vector<Word> NttConvolve(std::span<const Word> a, std::span<const Word> b,
                              Word q, KernelStats* stats = nullptr);

// Exact integer convolution. Throws std::overflow_error when a coefficient
// could reach 2^63.
std::vector<Word> ExactConvolve(std::span<const Word> a,
                                std::span<const Word> b,
                                KernelStats* stats = nullptr);

// Exact integer convolution with 128-bit coefficients: the 63-bit path when
// it suffices, three-prime CRT up to about 2^86, direct sums beyond. Throws
// std::overflow_error when a coefficient could reach 2^127.
std::vector<Uint128> ExactConvolveWide(std::span<const Word> a,
                                       std::span<const Word> b,
                                       KernelStats* stats = nullptr);

// Convolution modulo q with automatic kernel choice: direct NTT when q is
// NTT friendly, exact integer NTT followed by reduction otherwise, and the
// naive kernel for short operands. Lengths must be >= 1 and q >= 2.
std::vector<Word> OfflineConvolve(std::span<const Word> a,
                                  std::span<const Word> b, Word q,
                                  KernelStats* stats = nullptr);

// Product of two base-q numbers given as digit sequences, least significant
// first; |a| + |b| digits.
std::vector<Word> SchoolbookMultiply(std::span<const Word> a,
                                     std::span<const Word> b, Word q,
                                     KernelStats* stats = nullptr);

// out[k] = #{(i, j) : i + j = k, block[i] == segment[j]}, computed as a sum
// of indicator convolutions over the symbols present in both inputs.
std::vector<Word> MatchCounts(std::span<const Symbol> block,
                              std::span<const Symbol> segment,
                              KernelStats* stats = nullptr);

}  // namespace streamlab::engines

#endif  // STREAMLAB_ENGINES_OFFLINE_H_
