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

#ifndef STREAMLAB_INSTANCES_TOEPLITZ_H_
#define STREAMLAB_INSTANCES_TOEPLITZ_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "streamlab/core/modular.h"
#include "streamlab/core/symbols.h"

namespace streamlab::instances {

// ell x ell matrix over Z/qZ, constant along descending diagonals, defined by
// 2 ell - 1 values: entry(i, j) = values[ell - 1 - i + j].
class ToeplitzMatrix {
 public:
  // Throws std::invalid_argument unless |values| = 2 ell - 1, ell >= 1, q is
  // prime and every value is below q.
  ToeplitzMatrix(std::size_t ell, Word q, std::vector<Word> values);

  std::size_t ell() const { return ell_; }
  Word q() const { return q_; }
  const std::vector<Word>& values() const { return values_; }
  Word entry(std::size_t i, std::size_t j) const {
    return values_[ell_ - 1 - i + j];
  }
  ModMatrix ToMatrix() const;
  bool Nonsingular() const;

 private:
  std::size_t ell_;
  Word q_;
  std::vector<Word> values_;
};

// The matrix relating an input window of length ell to the outputs of the
// following ell arrivals: entry(i, j) = F[n - 1 - (ell + i) + j]. Requires
// 2 ell <= n; throws std::out_of_range otherwise.
ToeplitzMatrix BuildToeplitz(const SymbolString& F, std::size_t ell);

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational Reduced(std::uint64_t num, std::uint64_t den);
  std::string ToString() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Fraction of all q^(2 ell - 1) Toeplitz matrices that are nonsingular, by
// exhaustive enumeration. Throws std::invalid_argument when q is not prime
// and std::length_error when the count exceeds `budget`.
Rational ToeplitzNonsingularFraction(Word q, std::size_t ell,
                                     std::uint64_t budget = 1u << 22);

}  // namespace streamlab::instances

#endif  // STREAMLAB_INSTANCES_TOEPLITZ_H_
