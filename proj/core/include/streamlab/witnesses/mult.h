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

#ifndef STREAMLAB_WITNESSES_MULT_H_
#define STREAMLAB_WITNESSES_MULT_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "streamlab/core/symbols.h"
#include "streamlab/core/window.h"
#include "streamlab/instances/toeplitz.h"

namespace streamlab::witnesses {

struct Ambiguity {
  std::uint64_t ambiguity = 0;   // largest group of U_v with equal outputs
  std::uint64_t candidates = 0;  // q^(ell_v / 2)
  std::uint64_t distinct_outputs = 0;
};

// Enumerates every U_v, keeps the rest of `masked`, and groups candidates by
// the first `output_prefix` outputs of A_v for multiplication by F. Throws
// std::length_error when q^(ell_v / 2) exceeds `budget`.
Ambiguity MultAmbiguity(
    const SymbolString& F, const ArrivalWindow& v, const SymbolString& masked,
    std::size_t output_prefix = std::numeric_limits<std::size_t>::max(),
    std::uint64_t budget = 1u << 20);

struct FFraction {
  instances::Rational fraction;  // F with ambiguity <= threshold
  std::uint64_t qualifying = 0;
  std::uint64_t total = 0;
  // Ambiguity of each F (maximum over fixings), F enumerated as base-q
  // numbers with F[0] least significant.
  std::vector<std::uint64_t> per_f;
};

// For n = ell_v and v the root: over every F in [q]^ell_v, the fraction whose
// ambiguity, maximized over every fixing of the right half of U, is at most
// `threshold`. Throws std::invalid_argument unless q = 2 and ell_v is a power
// of two in [2, 8].
FFraction MultFFraction(std::uint64_t q, std::size_t ell_v,
                        std::uint64_t threshold = 4);

}  // namespace streamlab::witnesses

#endif  // STREAMLAB_WITNESSES_MULT_H_
