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

#include "streamlab/engines/offline.h"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

#include "streamlab/core/modular.h"

namespace streamlab::engines {
namespace {

constexpr std::size_t kDirectCutoff = 32;

struct NttPrime {
  Word mod;
  Word root;  // primitive root
};
constexpr NttPrime kP1{998244353, 3};
constexpr NttPrime kP2{167772161, 3};
constexpr NttPrime kP3{469762049, 3};

std::size_t TransformSize(std::size_t result_len) {
  return std::bit_ceil(std::max<std::size_t>(result_len, 1));
}

// In-place iterative radix-2 transform; returns the number of products.
std::uint64_t Transform(std::vector<Word>& a, bool invert, Word mod,
                        Word root) {
  const std::size_t len = a.size();
  for (std::size_t i = 1, j = 0; i < len; ++i) {
    std::size_t bit = len >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::uint64_t products = 0;
  for (std::size_t step = 2; step <= len; step <<= 1) {
    Word w_step = ModPow(root, (mod - 1) / step, mod);
    if (invert) w_step = ModInverse(w_step, mod);
    for (std::size_t start = 0; start < len; start += step) {
      Word w = 1;
      for (std::size_t k = 0; k < step / 2; ++k) {
        const Word u = a[start + k];
        const Word v = ModMul(a[start + k + step / 2], w, mod);
        a[start + k] = ModAdd(u, v, mod);
        a[start + k + step / 2] = ModSub(u, v, mod);
        w = ModMul(w, w_step, mod);
        products += 2;
      }
    }
  }
  if (invert) {
    const Word inv_len = ModInverse(len % mod, mod);
    for (Word& x : a) x = ModMul(x, inv_len, mod);
    products += len;
  }
  return products;
}

std::vector<Word> ConvolveModPrime(std::span<const Word> a,
                                   std::span<const Word> b, NttPrime p,
                                   std::uint64_t* products) {
  const std::size_t result_len = a.size() + b.size() - 1;
  const std::size_t len = TransformSize(result_len);
  std::vector<Word> fa(len, 0), fb(len, 0);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i] % p.mod;
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i] % p.mod;
  *products += Transform(fa, false, p.mod, p.root);
  *products += Transform(fb, false, p.mod, p.root);
  for (std::size_t i = 0; i < len; ++i) fa[i] = ModMul(fa[i], fb[i], p.mod);
  *products += len;
  *products += Transform(fa, true, p.mod, p.root);
  fa.resize(result_len);
  return fa;
}

Word FindPrimitiveRoot(Word p) {
  std::vector<Word> factors;
  Word m = p - 1;
  for (Word f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      factors.push_back(f);
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) factors.push_back(m);
  for (Word g = 2; g < p; ++g) {
    bool ok = true;
    for (Word f : factors) {
      if (ModPow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p == 2
}

void CheckOperands(std::span<const Word> a, std::span<const Word> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("convolution operands must be non-empty");
  }
}

Word MaxOf(std::span<const Word> v) {
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

// Exact coefficients below p1 p2 p3 from three prime-field transforms,
// combined by Garner's method: x = x1 + p1 (k2 + p2 k3).
std::vector<Uint128> CrtConvolve(std::span<const Word> a,
                                 std::span<const Word> b,
                                 std::uint64_t* products) {
  const std::vector<Word> r1 = ConvolveModPrime(a, b, kP1, products);
  const std::vector<Word> r2 = ConvolveModPrime(a, b, kP2, products);
  const std::vector<Word> r3 = ConvolveModPrime(a, b, kP3, products);
  const Word inv_p1_mod_p2 = ModInverse(kP1.mod % kP2.mod, kP2.mod);
  const Word p1p2_mod_p3 = ModMul(kP1.mod, kP2.mod, kP3.mod);
  const Word inv_p1p2_mod_p3 = ModInverse(p1p2_mod_p3, kP3.mod);
  std::vector<Uint128> out(r1.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    const Word k2 = ModMul(ModSub(r2[i], r1[i] % kP2.mod, kP2.mod),
                           inv_p1_mod_p2, kP2.mod);
    const Word x12_mod_p3 =
        (r1[i] + static_cast<Uint128>(kP1.mod) * k2) % kP3.mod;
    const Word k3 = ModMul(ModSub(r3[i], x12_mod_p3, kP3.mod), inv_p1p2_mod_p3,
                           kP3.mod);
    out[i] = r1[i] + static_cast<Uint128>(kP1.mod) * k2 +
             static_cast<Uint128>(kP1.mod) * kP2.mod * k3;
  }
  return out;
}

// min(|a|, |b|) max(a) max(b), saturating at 2^128 - 1.
Uint128 CoefficientBound(std::span<const Word> a, std::span<const Word> b) {
  const Uint128 top = static_cast<Uint128>(MaxOf(a)) * MaxOf(b);
  const Uint128 len = std::min(a.size(), b.size());
  if (top != 0 && len > ~Uint128{0} / top) return ~Uint128{0};
  return top * len;
}

}  // namespace

std::string_view KernelName(KernelKind kind) {
  switch (kind) {
    case KernelKind::kNaiveConv:
      return "naive_conv";
    case KernelKind::kNttConv:
      return "ntt_conv";
    case KernelKind::kNttExact:
      return "ntt_exact";
    case KernelKind::kSchoolbookMult:
      return "schoolbook_mult";
    case KernelKind::kHammingByConv:
      return "hamming_by_conv";
  }
  return "unknown";
}

std::vector<Word> NaiveConvolve(std::span<const Word> a,
                                std::span<const Word> b, Word q,
                                KernelStats* stats) {
  CheckOperands(a, b);
  if (q < 2) throw std::invalid_argument("modulus must be >= 2");
  std::vector<Word> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = ModAdd(out[i + j], ModMul(a[i] % q, b[j] % q, q), q);
    }
  }
  if (stats) stats->Record(KernelKind::kNaiveConv, a.size() * b.size());
  return out;
}

bool NttFriendly(Word q, std::size_t result_len) {
  if (q >= (Word{1} << 31) || !IsPrime(q)) return false;
  const Word len = TransformSize(result_len);
  return (q - 1) % (2 * len) == 0;
}

std::vector<Word> NttConvolve(std::span<const Word> a, std::span<const Word> b,
                              Word q, KernelStats* stats) {
  CheckOperands(a, b);
  if (!NttFriendly(q, a.size() + b.size() - 1)) {
    throw std::invalid_argument("modulus " + std::to_string(q) +
                                " does not support this transform size");
  }
  std::uint64_t products = 0;
  std::vector<Word> out =
      ConvolveModPrime(a, b, NttPrime{q, FindPrimitiveRoot(q)}, &products);
  if (stats) stats->Record(KernelKind::kNttConv, products);
  return out;
}

std::vector<Word> ExactConvolve(std::span<const Word> a,
                                std::span<const Word> b, KernelStats* stats) {
  CheckOperands(a, b);
  const Uint128 bound = CoefficientBound(a, b);
  if (bound >= (static_cast<Uint128>(1) << 63)) {
    throw std::overflow_error("exact convolution would exceed 63 bits");
  }
  const std::size_t result_len = a.size() + b.size() - 1;
  if (std::min(a.size(), b.size()) <= kDirectCutoff) {
    std::vector<Word> out(result_len, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    if (stats) stats->Record(KernelKind::kNaiveConv, a.size() * b.size());
    return out;
  }
  std::uint64_t products = 0;
  if (bound < kP1.mod) {
    std::vector<Word> out = ConvolveModPrime(a, b, kP1, &products);
    if (stats) stats->Record(KernelKind::kNttExact, products);
    return out;
  }
  const std::vector<Uint128> wide = CrtConvolve(a, b, &products);
  std::vector<Word> out(wide.begin(), wide.end());
  if (stats) stats->Record(KernelKind::kNttExact, products);
  return out;
}

std::vector<Uint128> ExactConvolveWide(std::span<const Word> a,
                                       std::span<const Word> b,
                                       KernelStats* stats) {
  CheckOperands(a, b);
  const Uint128 bound = CoefficientBound(a, b);
  if (bound < (static_cast<Uint128>(1) << 63)) {
    const std::vector<Word> narrow = ExactConvolve(a, b, stats);
    return {narrow.begin(), narrow.end()};
  }
  if (bound >= (static_cast<Uint128>(1) << 127)) {
    throw std::overflow_error("exact convolution would exceed 127 bits");
  }
  const Uint128 crt_limit = static_cast<Uint128>(kP1.mod) * kP2.mod * kP3.mod;
  if (bound < crt_limit && std::min(a.size(), b.size()) > kDirectCutoff) {
    std::uint64_t products = 0;
    std::vector<Uint128> out = CrtConvolve(a, b, &products);
    if (stats) stats->Record(KernelKind::kNttExact, products);
    return out;
  }
  std::vector<Uint128> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += static_cast<Uint128>(a[i]) * b[j];
    }
  }
  if (stats) stats->Record(KernelKind::kNaiveConv, a.size() * b.size());
  return out;
}

std::vector<Word> OfflineConvolve(std::span<const Word> a,
                                  std::span<const Word> b, Word q,
                                  KernelStats* stats) {
  CheckOperands(a, b);
  if (q < 2) throw std::invalid_argument("modulus must be >= 2");
  if (std::min(a.size(), b.size()) <= kDirectCutoff) {
    return NaiveConvolve(a, b, q, stats);
  }
  if (NttFriendly(q, a.size() + b.size() - 1)) {
    return NttConvolve(a, b, q, stats);
  }
  const Uint128 bound =
      static_cast<Uint128>(std::min(a.size(), b.size())) * (q - 1) *
      (q - 1);
  if (bound >= (static_cast<Uint128>(1) << 63)) {
    return NaiveConvolve(a, b, q, stats);
  }
  std::vector<Word> ra(a.begin(), a.end()), rb(b.begin(), b.end());
  for (Word& x : ra) x %= q;
  for (Word& x : rb) x %= q;
  std::vector<Word> out = ExactConvolve(ra, rb, stats);
  for (Word& x : out) x %= q;
  return out;
}

std::vector<Word> SchoolbookMultiply(std::span<const Word> a,
                                     std::span<const Word> b, Word q,
                                     KernelStats* stats) {
  CheckOperands(a, b);
  if (q < 2) throw std::invalid_argument("base must be >= 2");
  std::vector<Word> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Uint128 carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Uint128 cur =
          static_cast<Uint128>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<Word>(cur % q);
      carry = cur / q;
    }
    for (std::size_t k = i + b.size(); carry > 0 && k < out.size(); ++k) {
      const Uint128 cur = out[k] + carry;
      out[k] = static_cast<Word>(cur % q);
      carry = cur / q;
    }
  }
  if (stats) stats->Record(KernelKind::kSchoolbookMult, a.size() * b.size());
  return out;
}

std::vector<Word> MatchCounts(std::span<const Symbol> block,
                              std::span<const Symbol> segment,
                              KernelStats* stats) {
  if (block.empty() || segment.empty()) {
    throw std::invalid_argument("match operands must be non-empty");
  }
  const std::size_t result_len = block.size() + segment.size() - 1;
  std::vector<Word> out(result_len, 0);
  if (std::min(block.size(), segment.size()) <= kDirectCutoff) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = 0; j < segment.size(); ++j) {
        out[i + j] += block[i] == segment[j] ? 1 : 0;
      }
    }
    if (stats) {
      stats->Record(KernelKind::kHammingByConv, block.size() * segment.size());
    }
    return out;
  }
  std::map<Symbol, std::pair<bool, bool>> present;
  for (Symbol s : block) present[s].first = true;
  for (Symbol s : segment) present[s].second = true;
  KernelStats inner;
  for (const auto& [symbol, where] : present) {
    if (!where.first || !where.second) continue;
    std::vector<Word> ia(block.size()), ib(segment.size());
    for (std::size_t i = 0; i < block.size(); ++i) ia[i] = block[i] == symbol;
    for (std::size_t j = 0; j < segment.size(); ++j) {
      ib[j] = segment[j] == symbol;
    }
    const std::vector<Word> c = ExactConvolve(ia, ib, &inner);
    for (std::size_t k = 0; k < result_len; ++k) out[k] += c[k];
  }
  if (stats) stats->Record(KernelKind::kHammingByConv, inner.multiplications);
  return out;
}

}  // namespace streamlab::engines
