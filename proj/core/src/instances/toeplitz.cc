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

#include "streamlab/instances/toeplitz.h"

#include <numeric>
#include <stdexcept>

namespace streamlab::instances {

ToeplitzMatrix::ToeplitzMatrix(std::size_t ell, Word q,
                               std::vector<Word> values)
    : ell_(ell), q_(q), values_(std::move(values)) {
  if (ell_ < 1) throw std::invalid_argument("Toeplitz dimension must be >= 1");
  if (!IsPrime(q_)) {
    throw std::invalid_argument("Toeplitz modulus " + std::to_string(q_) +
                                " is not prime");
  }
  if (values_.size() != 2 * ell_ - 1) {
    throw std::invalid_argument("Toeplitz matrix needs 2 ell - 1 values");
  }
  for (Word v : values_) {
    if (v >= q_) throw std::invalid_argument("Toeplitz value outside [q]");
  }
}

ModMatrix ToeplitzMatrix::ToMatrix() const {
  ModMatrix m(ell_, std::vector<Word>(ell_));
  for (std::size_t i = 0; i < ell_; ++i) {
    for (std::size_t j = 0; j < ell_; ++j) m[i][j] = entry(i, j);
  }
  return m;
}

bool ToeplitzMatrix::Nonsingular() const {
  return RankModPrime(ToMatrix(), q_) == ell_;
}

ToeplitzMatrix BuildToeplitz(const SymbolString& F, std::size_t ell) {
  const std::size_t n = F.size();
  if (ell < 1 || 2 * ell > n) {
    throw std::out_of_range("Toeplitz dimension " + std::to_string(ell) +
                            " needs 1 <= ell <= n / 2 = " +
                            std::to_string(n / 2));
  }
  std::vector<Word> values(2 * ell - 1);
  for (std::size_t k = 0; k < values.size(); ++k) {
    values[k] = F[n - 2 * ell + k];
  }
  return ToeplitzMatrix(ell, F.alphabet(), std::move(values));
}

Rational Rational::Reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational ToeplitzNonsingularFraction(Word q, std::size_t ell,
                                     std::uint64_t budget) {
  if (!IsPrime(q)) {
    throw std::invalid_argument("modulus " + std::to_string(q) +
                                " is not prime");
  }
  if (ell < 1) throw std::invalid_argument("dimension must be >= 1");
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < 2 * ell - 1; ++k) {
    if (total > budget / q) {
      throw std::length_error("q^(2 ell - 1) exceeds the enumeration budget");
    }
    total *= q;
  }
  std::uint64_t nonsingular = 0;
  std::vector<Word> values(2 * ell - 1, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (Word& v : values) {
      v = c % q;
      c /= q;
    }
    if (ToeplitzMatrix(ell, q, values).Nonsingular()) ++nonsingular;
  }
  return Rational::Reduced(nonsingular, total);
}

}  // namespace streamlab::instances
