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

#include "streamlab/witnesses/mult.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "streamlab/engines/offline.h"

namespace streamlab::witnesses {

Ambiguity MultAmbiguity(const SymbolString& F, const ArrivalWindow& v,
                        const SymbolString& masked, std::size_t output_prefix,
                        std::uint64_t budget) {
  const std::size_t n = F.size();
  const Word q = F.alphabet();
  if (masked.size() != n) {
    throw std::invalid_argument("decoder input length differs from n");
  }
  if (v.t2 >= n) throw std::out_of_range("node outside the stream");
  const std::size_t h = v.half();
  Ambiguity result;
  result.candidates = 1;
  for (std::size_t i = 0; i < h; ++i) {
    if (result.candidates > budget / q) {
      throw std::length_error("q^(ell_v / 2) exceeds the enumeration budget");
    }
    result.candidates *= q;
  }
  const std::size_t keep = std::min(output_prefix, h);
  // Digits above t2 never influence A_v.
  std::vector<Word> f(F.data().begin(), F.data().begin() + v.t2 + 1);
  std::vector<Word> u(masked.data().begin(),
                      masked.data().begin() + v.t2 + 1);
  std::map<std::vector<Word>, std::uint64_t> groups;
  for (std::uint64_t code = 0; code < result.candidates; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < h; ++i) {
      u[v.t0 + i] = c % q;
      c /= q;
    }
    const std::vector<Word> product = engines::SchoolbookMultiply(f, u, q);
    std::vector<Word> key(product.begin() + v.t1 + 1,
                          product.begin() + v.t1 + 1 + keep);
    ++groups[key];
  }
  result.distinct_outputs = groups.size();
  for (const auto& [key, count] : groups) {
    result.ambiguity = std::max(result.ambiguity, count);
  }
  return result;
}

FFraction MultFFraction(std::uint64_t q, std::size_t ell_v,
                        std::uint64_t threshold) {
  if (q != 2) throw std::invalid_argument("F-fraction supports q = 2 only");
  if (!IsPowerOfTwo(ell_v) || ell_v < 2 || ell_v > 8) {
    throw std::invalid_argument("ell_v must be a power of two in [2, 8]");
  }
  const std::size_t n = ell_v;
  const ArrivalWindow root = TreeNode(n, 1);
  const std::size_t h = root.half();
  const std::uint64_t f_count = std::uint64_t{1} << n;
  const std::uint64_t fixings = std::uint64_t{1} << h;
  FFraction out;
  out.total = f_count;
  for (std::uint64_t fcode = 0; fcode < f_count; ++fcode) {
    std::vector<Symbol> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = (fcode >> i) & 1;
    const SymbolString F(q, f);
    std::uint64_t worst = 0;
    for (std::uint64_t fix = 0; fix < fixings; ++fix) {
      std::vector<Symbol> u(n, 0);
      for (std::size_t i = 0; i < h; ++i) u[root.t1 + 1 + i] = (fix >> i) & 1;
      worst = std::max(worst,
                       MultAmbiguity(F, root, SymbolString(q, u)).ambiguity);
    }
    out.per_f.push_back(worst);
    if (worst <= threshold) ++out.qualifying;
  }
  out.fraction = instances::Rational::Reduced(out.qualifying, out.total);
  return out;
}

}  // namespace streamlab::witnesses
