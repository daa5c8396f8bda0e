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

#ifndef STREAMLAB_INSTANCES_CYCLIC_CODE_H_
#define STREAMLAB_INSTANCES_CYCLIC_CODE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace streamlab::instances {

// Binary words of length mu (mu - 1) <= 64 stored as bit masks; bit k is
// position k of the word.
struct CyclicCode {
  unsigned mu = 0;
  unsigned gamma = 0;
  unsigned length = 0;
  std::vector<std::uint64_t> words;  // increasing
  std::uint64_t size_bound = 0;      // (mu - 1)^gamma
  std::uint64_t candidates_examined = 0;

  std::size_t size() const { return words.size(); }
  std::uint64_t min_distance() const;
  unsigned required_distance() const { return 2 * (mu - gamma); }
};

std::uint64_t RotateWord(std::uint64_t word, unsigned length, unsigned by);
std::string WordToString(std::uint64_t word, unsigned length);

// Greedy union of rotation orbits of weight-mu words, scanned in increasing
// numeric order of their smallest rotation. An orbit is added when it keeps
// every pairwise distance >= 2 (mu - gamma) and the size within
// (mu - 1)^gamma. Throws std::invalid_argument unless mu >= 4, mu - 1 is
// prime, mu (mu - 1) <= 64, gamma odd and gamma < mu; std::length_error when
// more than `budget` weight-mu words would be scanned; std::runtime_error when
// no orbit qualifies.
CyclicCode SearchCyclicCode(unsigned mu, unsigned gamma,
                            std::uint64_t budget = std::uint64_t{1} << 24);

struct CodeCheck {
  bool constant_weight = false;
  bool cyclic = false;
  bool distance = false;
  bool size = false;
  std::uint64_t min_distance = 0;

  bool ok() const { return constant_weight && cyclic && distance && size; }
  std::string Describe() const;
};

// Checks the four code properties from the words alone.
CodeCheck CheckCyclicCode(const CyclicCode& code);

}  // namespace streamlab::instances

#endif  // STREAMLAB_INSTANCES_CYCLIC_CODE_H_
