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

#include "streamlab/engines/processor.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "streamlab/core/modular.h"

namespace streamlab::engines {
namespace {

using probelab::CellStore;

// Adds `value` to the base-q number whose digit k sits at base + k, dropping
// digits at positions >= limit.
void AddDigits(CellStore& store, Address base, std::size_t k, Uint128 value,
               Word q, std::size_t limit) {
  Uint128 carry = value;
  for (; carry > 0 && k < limit; ++k) {
    const Uint128 cur = carry + store.Read(base + k);
    store.Write(base + k, static_cast<Word>(cur % q));
    carry = cur / q;
  }
}

// Convolution and Hamming distance by rescanning a ring buffer of the window.
class NaiveWindowProcessor final : public OnlineProcessor {
 public:
  NaiveWindowProcessor(Problem problem, SymbolString fixed,
                       const Params& params)
      : OnlineProcessor(problem, Algorithm::kNaive, std::move(fixed), params) {
    SetLayout({{"counter", kCounter, 1}, {"window", kRing, params.n}},
              std::max<Word>(params.n, params.q - 1));
  }

 private:
  static constexpr Address kRing = 1;

  Word DoUpdate(CellStore& store, std::size_t t, Symbol x,
                KernelStats*) const override {
    const std::size_t n = params().n;
    const Word q = params().q;
    const std::size_t slot = t % n;
    store.Write(kRing + slot, x);
    const bool hamming = problem() == Problem::kHamming;
    const Uint128 worst =
        static_cast<Uint128>(q - 1) * (q - 1) * n;
    const bool lazy = worst <= std::numeric_limits<Word>::max();
    Word acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Word value = store.Read(kRing + k);
      const Word g = lag_coefficients_[k <= slot ? slot - k : slot + n - k];
      if (hamming) {
        acc += g != value ? 1 : 0;
      } else if (lazy) {
        acc += g * value;
      } else {
        acc = ModAdd(acc, ModMul(g, value, q), q);
      }
    }
    if (!hamming && lazy) acc %= q;
    return acc;
  }
};

// Multiplication by rescanning all arrived digits; the running carry is kept
// as base-q limbs.
class NaiveMultProcessor final : public OnlineProcessor {
 public:
  NaiveMultProcessor(SymbolString fixed, const Params& params)
      : OnlineProcessor(Problem::kMultiplication, Algorithm::kNaive,
                        std::move(fixed), params) {
    // Enough limbs for any carry, which stays below n * q.
    const Uint128 bound =
        static_cast<Uint128>(params.n) * params.q;
    Uint128 reach = 1;
    while (reach <= bound) {
      reach *= params.q;
      ++limbs_;
    }
    carry_base_ = kHistory + params.n;
    SetLayout({{"counter", kCounter, 1},
               {"history", kHistory, params.n},
               {"carry", carry_base_, limbs_}},
              std::max<Word>(params.n, params.q - 1));
  }

 private:
  static constexpr Address kHistory = 1;

  Word DoUpdate(CellStore& store, std::size_t t, Symbol x,
                KernelStats*) const override {
    const Word q = params().q;
    store.Write(kHistory + t, x);
    Uint128 sum = 0;
    for (std::size_t j = 0; j <= t; ++j) {
      sum += static_cast<Uint128>(lag_coefficients_[t - j]) *
             store.Read(kHistory + j);
    }
    Uint128 place = 1;
    for (std::size_t k = 0; k < limbs_; ++k) {
      sum += place * store.Read(carry_base_ + k);
      place *= q;
    }
    const Word digit = static_cast<Word>(sum % q);
    Uint128 carry = sum / q;
    for (std::size_t k = 0; k < limbs_; ++k) {
      store.Write(carry_base_ + k, static_cast<Word>(carry % q));
      carry /= q;
    }
    return digit;
  }

  std::size_t limbs_ = 0;
  Address carry_base_ = 0;
};

// Blocked relaxed evaluation. Lags d < B0 are summed directly; every other
// lag is covered by the unique block size B with B <= d < 2B. When an aligned
// block U[s, s + B) completes, its products with G[B, 2B) are added into the
// pending cells of outputs s + B .. s + 3B - 2, all still in the future.
class FastProcessor final : public OnlineProcessor {
 public:
  FastProcessor(Problem problem, SymbolString fixed, const Params& params,
                FastOptions options)
      : OnlineProcessor(problem, Algorithm::kFast, std::move(fixed), params) {
    if (!IsPowerOfTwo(options.smallest_block)) {
      throw std::invalid_argument("smallest block must be a power of two");
    }
    const std::size_t n = params.n;
    smallest_ = std::min(options.smallest_block, n);
    pending_base_ = kHistory + n;
    const char* pending_name =
        problem == Problem::kMultiplication ? "digits" : "pending";
    SetLayout({{"counter", kCounter, 1},
               {"history", kHistory, n},
               {pending_name, pending_base_, n}},
              std::max<Word>(n, params.q - 1));
    if (problem == Problem::kHamming) {
      // Matches against the symbol-0 pre-fill for lags beyond t.
      prefill_matches_.assign(n, 0);
      for (std::size_t t = n; t-- > 0;) {
        const std::size_t next =
            t + 1 < n ? prefill_matches_[t + 1] : 0;
        prefill_matches_[t] =
            next + (t + 1 < n && lag_coefficients_[t + 1] == 0 ? 1 : 0);
      }
    }
  }

 private:
  static constexpr Address kHistory = 1;

  Word DoUpdate(CellStore& store, std::size_t t, Symbol x,
                KernelStats* stats) const override {
    const std::size_t n = params().n;
    const Word q = params().q;
    store.Write(kHistory + t, x);

    // Direct lags.
    const std::size_t direct = std::min(smallest_, t + 1);
    Uint128 acc = 0;
    for (std::size_t d = 0; d < direct; ++d) {
      const Word u = d == 0 ? x : store.Read(kHistory + t - d);
      const Word g = lag_coefficients_[d];
      if (problem() == Problem::kHamming) {
        acc += g == u ? 1 : 0;
      } else {
        acc += static_cast<Uint128>(g) * u;
      }
    }

    Word output = 0;
    switch (problem()) {
      case Problem::kConvolution:
        output = static_cast<Word>(
            (acc + store.Read(pending_base_ + t)) % q);
        break;
      case Problem::kHamming: {
        const Word matches = static_cast<Word>(acc) +
                             store.Read(pending_base_ + t) +
                             prefill_matches_[t];
        output = n - matches;
        break;
      }
      case Problem::kMultiplication:
        AddDigits(store, pending_base_, t, acc, q, n);
        output = store.Read(pending_base_ + t);
        break;
    }

    // Completed blocks, smallest first.
    for (std::size_t size = smallest_; size < n; size <<= 1) {
      if ((t + 1) % size != 0) continue;
      const std::size_t start = t + 1 - size;
      if (start + size >= n) continue;  // every target is past the end
      ProcessBlock(store, start, size, stats);
    }
    return output;
  }

  void ProcessBlock(CellStore& store, std::size_t start, std::size_t size,
                    KernelStats* stats) const {
    const std::size_t n = params().n;
    const Word q = params().q;
    std::vector<Word> block(size);
    for (std::size_t i = 0; i < size; ++i) {
      block[i] = store.Read(kHistory + start + i);
    }
    const std::span<const Word> segment(lag_coefficients_.data() + size,
                                        size);
    std::vector<Word> products;
    if (problem() == Problem::kMultiplication) {
      const std::vector<Uint128> wide = ExactConvolveWide(block, segment, stats);
      const std::size_t first_target = start + size;
      for (std::size_t k = 0; k < wide.size() && first_target + k < n; ++k) {
        AddDigits(store, pending_base_, first_target + k, wide[k], q, n);
      }
      return;
    }
    switch (problem()) {
      case Problem::kConvolution:
        products = OfflineConvolve(block, segment, q, stats);
        break;
      case Problem::kMultiplication:
        break;
      case Problem::kHamming: {
        std::vector<Symbol> a(block.begin(), block.end());
        std::vector<Symbol> b(segment.begin(), segment.end());
        products = MatchCounts(a, b, stats);
        break;
      }
    }
    const std::size_t first_target = start + size;
    for (std::size_t k = 0; k < products.size(); ++k) {
      const std::size_t target = first_target + k;
      if (target >= n) break;
      const Word c = products[k];
      if (c == 0) continue;
      const Address addr = pending_base_ + target;
      const Word cur = store.Read(addr);
      store.Write(addr, problem() == Problem::kConvolution
                            ? ModAdd(cur, c, q)
                            : cur + c);
    }
  }

  std::size_t smallest_ = 1;
  Address pending_base_ = 0;
  std::vector<Word> prefill_matches_;
};

}  // namespace

std::string_view ProblemName(Problem problem) {
  switch (problem) {
    case Problem::kConvolution:
      return "conv";
    case Problem::kMultiplication:
      return "mult";
    case Problem::kHamming:
      return "hamming";
  }
  return "unknown";
}

Problem ParseProblem(std::string_view name) {
  if (name == "conv") return Problem::kConvolution;
  if (name == "mult") return Problem::kMultiplication;
  if (name == "hamming") return Problem::kHamming;
  throw std::invalid_argument("unknown problem '" + std::string(name) +
                              "' (expected conv, mult or hamming)");
}

std::string_view AlgorithmName(Algorithm algorithm) {
  return algorithm == Algorithm::kNaive ? "naive" : "fast";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "naive") return Algorithm::kNaive;
  if (name == "fast") return Algorithm::kFast;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                              "' (expected naive or fast)");
}

OnlineProcessor::OnlineProcessor(Problem problem, Algorithm algorithm,
                                 SymbolString fixed, const Params& params)
    : problem_(problem),
      algorithm_(algorithm),
      fixed_(std::move(fixed)),
      params_(params) {
  const std::size_t n = params.n;
  if (fixed_.size() != n) {
    throw std::invalid_argument("fixed operand has length " +
                                std::to_string(fixed_.size()) +
                                ", expected n = " + std::to_string(n));
  }
  if (fixed_.alphabet() != params.q) {
    throw std::invalid_argument("fixed operand alphabet differs from q");
  }
  lag_coefficients_.resize(n);
  for (std::size_t d = 0; d < n; ++d) {
    lag_coefficients_[d] =
        problem == Problem::kMultiplication ? fixed_[d] : fixed_[n - 1 - d];
  }
}

Address OnlineProcessor::cell_count() const {
  Address end = 0;
  for (const LayoutRegion& r : layout_) end = std::max(end, r.begin + r.size);
  return end;
}

void OnlineProcessor::SetLayout(std::vector<LayoutRegion> layout,
                                Word max_value) {
  layout_ = std::move(layout);
  const Address max_addr = cell_count() - 1;
  required_width_ = std::max({BitWidth(max_value), BitWidth(max_addr), 1u});
  if (params_.w < required_width_) {
    throw std::invalid_argument(
        "cell width " + std::to_string(params_.w) + " is below the " +
        std::to_string(required_width_) + " bits this processor needs");
  }
}

Word OnlineProcessor::Update(CellStore& store, Symbol x,
                             KernelStats* stats) const {
  if (x >= params_.q) {
    throw std::invalid_argument("symbol " + std::to_string(x) +
                                " outside the alphabet");
  }
  if (problem_ == Problem::kHamming && x == StarSymbol(params_.q)) {
    throw std::invalid_argument("STAR may not arrive in the stream");
  }
  if (store.width() < required_width_) {
    throw std::invalid_argument("cell store is narrower than required");
  }
  const Word t = store.Read(kCounter);
  if (t >= params_.n) {
    throw std::out_of_range("processor has already seen n arrivals");
  }
  const Word output = DoUpdate(store, static_cast<std::size_t>(t), x, stats);
  store.Write(kCounter, t + 1);
  return output;
}

std::unique_ptr<OnlineProcessor> MakeProcessor(Problem problem,
                                               Algorithm algorithm,
                                               const SymbolString& fixed,
                                               const Params& params,
                                               FastOptions options) {
  if (algorithm == Algorithm::kFast) {
    return std::make_unique<FastProcessor>(problem, fixed, params, options);
  }
  if (problem == Problem::kMultiplication) {
    return std::make_unique<NaiveMultProcessor>(fixed, params);
  }
  return std::make_unique<NaiveWindowProcessor>(problem, fixed, params);
}

OutputArray RunStream(const OnlineProcessor& processor, CellStore& store,
                      const SymbolString& U, Epoch first_epoch,
                      KernelStats* stats) {
  OutputArray out;
  out.reserve(U.size());
  for (std::size_t i = 0; i < U.size(); ++i) {
    store.set_epoch(first_epoch + i);
    out.push_back(processor.Update(store, U[i], stats));
  }
  return out;
}

OutputArray ReferenceOutputs(Problem problem, const SymbolString& fixed,
                             const SymbolString& U) {
  const std::size_t n = fixed.size();
  const Word q = fixed.alphabet();
  if (U.size() > n) throw std::invalid_argument("stream longer than n");
  OutputArray out(U.size());
  if (problem == Problem::kMultiplication) {
    std::vector<Word> f(fixed.data().begin(), fixed.data().end());
    std::vector<Word> u(U.data().begin(), U.data().end());
    if (u.empty()) return out;
    const std::vector<Word> product = SchoolbookMultiply(f, u, q);
    std::copy_n(product.begin(), U.size(), out.begin());
    return out;
  }
  for (std::size_t t = 0; t < U.size(); ++t) {
    Word acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      // Window position i holds U[t - (n - 1 - i)], pre-filled with 0.
      const std::size_t lag = n - 1 - i;
      const Word s = lag <= t ? U[t - lag] : 0;
      if (problem == Problem::kHamming) {
        acc += fixed[i] != s ? 1 : 0;
      } else {
        acc = ModAdd(acc, ModMul(fixed[i], s, q), q);
      }
    }
    out[t] = acc;
  }
  return out;
}

}  // namespace streamlab::engines
