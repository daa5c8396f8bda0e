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

#include "streamlab/instances/cyclic_code.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "streamlab/core/modular.h"

namespace streamlab::instances {
namespace {

std::uint64_t Mask(unsigned length) {
  return length == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << length) - 1;
}

unsigned Distance(std::uint64_t a, std::uint64_t b) {
  return static_cast<unsigned>(std::popcount(a ^ b));
}

// Next larger word with the same popcount.
std::uint64_t NextSamePopcount(std::uint64_t x) {
  const std::uint64_t smallest = x & (~x + 1);
  const std::uint64_t ripple = x + smallest;
  if (ripple == 0) return 0;
  const std::uint64_t ones = ((x ^ ripple) >> 2) / smallest;
  return ripple | ones;
}

std::uint64_t Binomial(unsigned n, unsigned k) {
  Uint128 r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(r);
}

}  // namespace

std::uint64_t RotateWord(std::uint64_t word, unsigned length, unsigned by) {
  by %= length;
  if (by == 0) return word;
  return ((word << by) | (word >> (length - by))) & Mask(length);
}

std::string WordToString(std::uint64_t word, unsigned length) {
  std::string s(length, '0');
  for (unsigned k = 0; k < length; ++k) {
    if ((word >> k) & 1) s[k] = '1';
  }
  return s;
}

std::uint64_t CyclicCode::min_distance() const {
  std::uint64_t best = length + 1;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      best = std::min<std::uint64_t>(best, Distance(words[a], words[b]));
    }
  }
  return best;
}

CyclicCode SearchCyclicCode(unsigned mu, unsigned gamma,
                            std::uint64_t budget) {
  if (mu < 4 || !IsPrime(mu - 1)) {
    throw std::invalid_argument("code search needs mu >= 4 with mu - 1 prime");
  }
  if (mu * (mu - 1) > 64) {
    throw std::invalid_argument("code length mu (mu - 1) must be <= 64");
  }
  if (gamma % 2 == 0 || gamma >= mu) {
    throw std::invalid_argument("gamma must be odd and below mu");
  }
  CyclicCode code;
  code.mu = mu;
  code.gamma = gamma;
  code.length = mu * (mu - 1);
  code.size_bound = 1;
  for (unsigned k = 0; k < gamma; ++k) code.size_bound *= mu - 1;
  if (Binomial(code.length, mu) > budget) {
    throw std::length_error("weight-mu words exceed the search budget");
  }
  const unsigned need = code.required_distance();
  const std::uint64_t last = Mask(mu) << (code.length - mu);

  std::vector<std::uint64_t> chosen;
  for (std::uint64_t word = Mask(mu);; word = NextSamePopcount(word)) {
    ++code.candidates_examined;
    std::set<std::uint64_t> orbit;
    bool canonical = true;
    for (unsigned s = 0; s < code.length; ++s) {
      const std::uint64_t rotated = RotateWord(word, code.length, s);
      if (rotated < word) {
        canonical = false;
        break;
      }
      orbit.insert(rotated);
    }
    if (canonical && chosen.size() + orbit.size() <= code.size_bound) {
      bool fits = true;
      for (auto a = orbit.begin(); fits && a != orbit.end(); ++a) {
        for (auto b = std::next(a); fits && b != orbit.end(); ++b) {
          fits = Distance(*a, *b) >= need;
        }
        for (std::size_t c = 0; fits && c < chosen.size(); ++c) {
          fits = Distance(*a, chosen[c]) >= need;
        }
      }
      if (fits) chosen.insert(chosen.end(), orbit.begin(), orbit.end());
    }
    if (word == last || chosen.size() == code.size_bound) break;
  }
  if (chosen.empty()) {
    throw std::runtime_error("no rotation orbit reaches distance " +
                             std::to_string(need));
  }
  std::sort(chosen.begin(), chosen.end());
  code.words = std::move(chosen);
  return code;
}

std::string CodeCheck::Describe() const {
  std::string s;
  s += constant_weight ? "weight ok" : "weight FAIL";
  s += cyclic ? ", cyclic ok" : ", cyclic FAIL";
  s += distance ? ", distance ok" : ", distance FAIL";
  s += size ? ", size ok" : ", size FAIL";
  s += " (min distance " + std::to_string(min_distance) + ")";
  return s;
}

CodeCheck CheckCyclicCode(const CyclicCode& code) {
  CodeCheck check;
  const std::set<std::uint64_t> members(code.words.begin(), code.words.end());
  check.constant_weight = !code.words.empty();
  check.cyclic = members.size() == code.words.size();
  for (std::uint64_t word : code.words) {
    if ((word & ~Mask(code.length)) != 0 ||
        static_cast<unsigned>(std::popcount(word)) != code.mu) {
      check.constant_weight = false;
    }
    const std::uint64_t shifted = RotateWord(word, code.length, 1);
    if (members.count(shifted) == 0) check.cyclic = false;
  }
  check.min_distance = code.min_distance();
  check.distance = check.min_distance >= 2ull * (code.mu - code.gamma);
  std::uint64_t bound = 1;
  for (unsigned k = 0; k < code.gamma; ++k) bound *= code.mu - 1;
  check.size = code.words.size() <= bound;
  return check;
}

}  // namespace streamlab::instances
