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

#ifndef STREAMLAB_ENGINES_PROCESSOR_H_
#define STREAMLAB_ENGINES_PROCESSOR_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "streamlab/core/params.h"
#include "streamlab/core/symbols.h"
#include "streamlab/engines/offline.h"
#include "streamlab/probelab/cell_store.h"

namespace streamlab::engines {

enum class Problem { kConvolution, kMultiplication, kHamming };
enum class Algorithm { kNaive, kFast };

std::string_view ProblemName(Problem problem);
Problem ParseProblem(std::string_view name);  // "conv", "mult", "hamming"
std::string_view AlgorithmName(Algorithm algorithm);
Algorithm ParseAlgorithm(std::string_view name);  // "naive", "fast"

// A named range of arena addresses.
struct LayoutRegion {
  std::string name;
  Address begin = 0;
  Address size = 0;
};

// An online processor keeps nothing between updates: the arrival counter and
// every other piece of state live in the cell store passed to Update. Only
// the fixed operand and quantities derived from it are held by the object.
// A processor accepts exactly n arrivals per store.
class OnlineProcessor {
 public:
  virtual ~OnlineProcessor() = default;

  Problem problem() const { return problem_; }
  Algorithm algorithm() const { return algorithm_; }
  const SymbolString& fixed() const { return fixed_; }
  const Params& params() const { return params_; }
  const std::vector<LayoutRegion>& layout() const { return layout_; }
  // Arena addresses are 0 .. cell_count() - 1.
  Address cell_count() const;
  // Smallest cell width able to hold every address and value used.
  unsigned required_width() const { return required_width_; }

  // Processes the next arrival and returns its output. Throws
  // std::invalid_argument for a symbol outside [q] (or STAR for Hamming) or a
  // store narrower than required_width(), std::out_of_range once n arrivals
  // have been processed.
  Word Update(probelab::CellStore& store, Symbol x,
              KernelStats* stats = nullptr) const;

 protected:
  OnlineProcessor(Problem problem, Algorithm algorithm, SymbolString fixed,
                  const Params& params);

  void SetLayout(std::vector<LayoutRegion> layout, Word max_value);
  virtual Word DoUpdate(probelab::CellStore& store, std::size_t t, Symbol x,
                        KernelStats* stats) const = 0;

  // G[d] is the coefficient applied to U[t - d] in output t.
  std::vector<Word> lag_coefficients_;

  static constexpr Address kCounter = 0;

 private:
  Problem problem_;
  Algorithm algorithm_;
  SymbolString fixed_;
  Params params_;
  std::vector<LayoutRegion> layout_;
  unsigned required_width_ = 1;
};

struct FastOptions {
  // Lags below this power of two are accumulated directly at every arrival.
  std::size_t smallest_block = 4;
};

// Throws std::invalid_argument when |F| != n, F's alphabet differs from q, or
// params.w < the processor's required width.
std::unique_ptr<OnlineProcessor> MakeProcessor(Problem problem,
                                               Algorithm algorithm,
                                               const SymbolString& fixed,
                                               const Params& params,
                                               FastOptions options = {});

// Feeds U to the processor, stamping arrival i with epoch first_epoch + i.
OutputArray RunStream(const OnlineProcessor& processor,
                      probelab::CellStore& store, const SymbolString& U,
                      Epoch first_epoch = 0, KernelStats* stats = nullptr);

// Outputs straight from the problem definitions, without a cell store.
OutputArray ReferenceOutputs(Problem problem, const SymbolString& fixed,
                             const SymbolString& U);

}  // namespace streamlab::engines

#endif  // STREAMLAB_ENGINES_PROCESSOR_H_
