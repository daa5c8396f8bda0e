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

#include "streamlab/witnesses/decode.h"

#include <stdexcept>

#include "streamlab/core/modular.h"
#include "streamlab/engines/processor.h"

namespace streamlab::witnesses {
namespace {

using engines::Problem;
using engines::ReferenceOutputs;

void CheckInputs(const OutputArray& A_v, const ArrivalWindow& v,
                 const SymbolString& F, const SymbolString& masked) {
  if (masked.size() != F.size()) {
    throw std::invalid_argument("decoder input length differs from n");
  }
  if (v.t2 >= F.size()) throw std::out_of_range("node outside the stream");
  if (A_v.size() != v.half()) {
    throw std::invalid_argument("A_v must hold ell_v / 2 outputs");
  }
}

// Outputs of the right interval with U_v replaced by zeros.
std::vector<Word> OutsideContribution(const ArrivalWindow& v,
                                      const SymbolString& F,
                                      const SymbolString& masked) {
  const OutputArray full =
      ReferenceOutputs(Problem::kConvolution, F, MaskUv(masked, v, 0));
  return SliceAv(full, v);
}

}  // namespace

bool MatchesTruth(const DecodeReport& report, const SymbolString& U) {
  for (const auto& [index, symbol] : report.recovered) {
    if (index >= U.size() || U[index] != symbol) return false;
  }
  return true;
}

DecodeReport DecodeConvKn(const OutputArray& A_v, const ArrivalWindow& v,
                          const SymbolString& F, const SymbolString& masked) {
  CheckInputs(A_v, v, F, masked);
  const Word q = F.alphabet();
  const std::size_t ell = v.half();
  const std::vector<Word> outside = OutsideContribution(v, F, masked);
  DecodeReport report;
  report.node_id = v.node_id;
  report.method = "conv_kn";
  for (std::size_t i = ell / 2; i < ell; ++i) {
    report.recovered[v.t0 + i] =
        static_cast<Symbol>(ModSub(A_v[i] % q, outside[i], q));
  }
  report.ok = true;
  return report;
}

DecodeReport DecodeConvToeplitz(const OutputArray& A_v, const ArrivalWindow& v,
                                const SymbolString& F,
                                const SymbolString& masked) {
  CheckInputs(A_v, v, F, masked);
  const Word q = F.alphabet();
  if (!IsPrime(q)) {
    throw std::invalid_argument("Toeplitz decoding needs a prime q");
  }
  const std::size_t ell = v.half();
  const std::size_t n = F.size();
  const std::vector<Word> outside = OutsideContribution(v, F, masked);
  ModMatrix m(ell, std::vector<Word>(ell));
  std::vector<Word> rhs(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) m[i][j] = F[n - 1 - (ell + i) + j];
    rhs[i] = ModSub(A_v[i] % q, outside[i], q);
  }
  const LinearSolution sol = SolveModPrime(std::move(m), std::move(rhs), q);
  DecodeReport report;
  report.node_id = v.node_id;
  report.method = "conv_toeplitz";
  if (!sol.solution) {
    report.ambiguity = 0;
    report.detail = "inconsistent system";
    return report;
  }
  if (sol.kernel_dim > 0) {
    report.ambiguity = 1;
    for (std::size_t k = 0; k < sol.kernel_dim; ++k) report.ambiguity *= q;
    report.detail = "singular matrix, kernel dimension " +
                    std::to_string(sol.kernel_dim);
    return report;
  }
  for (std::size_t j = 0; j < ell; ++j) {
    report.recovered[v.t0 + j] = static_cast<Symbol>((*sol.solution)[j]);
  }
  report.ok = true;
  return report;
}

std::vector<std::int64_t> HammingBaselineOffsets(
    const ArrivalWindow& v, const instances::HammingInstance& instance,
    const SymbolString& masked, Symbol placeholder) {
  const OutputArray baseline = ReferenceOutputs(
      Problem::kHamming, instance.F, MaskUv(masked, v, placeholder));
  const OutputArray slice = SliceAv(baseline, v);
  std::vector<std::int64_t> out(slice.size());
  for (std::size_t i = 0; i < slice.size(); ++i) {
    out[i] = static_cast<std::int64_t>(slice[i]) -
             static_cast<std::int64_t>(instance.r);
  }
  return out;
}

DecodeReport DecodeHammingBlocks(const OutputArray& A_v, const ArrivalWindow& v,
                                 const instances::HammingInstance& instance,
                                 const SymbolString& masked,
                                 Symbol placeholder) {
  CheckInputs(A_v, v, instance.F, masked);
  if (placeholder == ~Symbol{0}) placeholder = DiamondSymbol(instance.q);
  const std::vector<std::int64_t> offsets =
      HammingBaselineOffsets(v, instance, masked, placeholder);
  const std::size_t r = instance.r;
  const std::size_t block = 2 * r;
  const std::size_t h = v.half();
  DecodeReport report;
  report.node_id = v.node_id;
  report.method = "hamming_blocks";
  report.ok = true;
  const std::size_t first = v.t0 + h / 2;
  for (std::size_t bs = (first + block - 1) / block * block;
       bs + block - 1 <= v.t1; bs += block) {
    std::vector<Word> ham(r + 1);
    for (std::size_t a = 0; a <= r; ++a) {
      const std::size_t t = bs + a + h;  // output whose copy at lag h reads here
      const std::size_t k = t - (v.t1 + 1);
      ham[a] = static_cast<Word>(static_cast<std::int64_t>(A_v[k]) -
                                 offsets[k]);
    }
    const std::optional<std::size_t> member = instance.family.Find(ham);
    if (!member) {
      report.ok = false;
      report.detail = "HamArray of block at " + std::to_string(bs) +
                      " is not in the family";
      continue;
    }
    report.blocks.emplace_back(bs / block, *member);
    const SymbolString& u = instance.family.members[*member].uprime;
    for (std::size_t i = 0; i < block; ++i) report.recovered[bs + i] = u[i];
  }
  return report;
}

void WriteDecodeCsv(std::ostream& out, const std::vector<DecodeReport>& rows) {
  out << "node_id,method,recovered_count,ambiguity,ok\n";
  for (const DecodeReport& r : rows) {
    out << r.node_id << ',' << r.method << ',' << r.recovered.size() << ','
        << r.ambiguity << ',' << (r.ok ? "true" : "false") << '\n';
  }
}

}  // namespace streamlab::witnesses
