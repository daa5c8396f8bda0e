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

#include "streamlab/core/modular.h"

#include <stdexcept>
#include <utility>

namespace streamlab {

Word ModPow(Word base, std::uint64_t exp, Word q) {
  Word result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = ModMul(result, base, q);
    base = ModMul(base, base, q);
    exp >>= 1;
  }
  return result;
}

Word ModInverse(Word a, Word q) {
  if (a % q == 0) throw std::domain_error("zero has no inverse");
  return ModPow(a, q - 2, q);
}

bool IsPrime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (x % p == 0) return x == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = x - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    Word y = ModPow(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      y = ModMul(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Reduces m (augmented or not) to reduced row echelon form in place over the
// first `cols` columns; returns the pivot column of each pivot row.
std::vector<std::size_t> EchelonForm(ModMatrix& m, std::size_t cols, Word q) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] % q == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Word inv = ModInverse(m[row][col], q);
    for (Word& x : m[row]) x = ModMul(x, inv, q);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Word factor = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) {
        m[r][c] = ModSub(m[r][c], ModMul(factor, m[row][c], q), q);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t RankModPrime(ModMatrix m, Word q) {
  if (!IsPrime(q)) throw std::invalid_argument("modulus must be prime");
  if (m.empty()) return 0;
  for (auto& row : m) {
    for (Word& x : row) x %= q;
  }
  return EchelonForm(m, m.front().size(), q).size();
}

LinearSolution SolveModPrime(ModMatrix m, std::vector<Word> rhs, Word q) {
  if (!IsPrime(q)) throw std::invalid_argument("modulus must be prime");
  if (m.size() != rhs.size()) {
    throw std::invalid_argument("matrix and right-hand side disagree in size");
  }
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (Word& x : m[r]) x %= q;
    m[r].push_back(rhs[r] % q);
  }
  const std::vector<std::size_t> pivots = EchelonForm(m, cols, q);
  LinearSolution out;
  out.kernel_dim = cols - pivots.size();
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (m[r][cols] != 0) return out;
  }
  std::vector<Word> x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  out.solution = std::move(x);
  return out;
}

}  // namespace streamlab
