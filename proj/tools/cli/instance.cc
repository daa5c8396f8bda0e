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

#include "cli/instance.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "streamlab/core/rng.h"
#include "streamlab/core/string_io.h"
#include "streamlab/instances/kn.h"

namespace streamlab::cli {
namespace {

using nlohmann::json;

SymbolString RandomString(std::uint64_t q, std::size_t n, Rng& rng,
                          bool avoid_star) {
  std::vector<Symbol> data(n);
  const std::uint64_t bound = avoid_star ? q - 1 : q;
  for (Symbol& x : data) x = static_cast<Symbol>(rng.Uniform(bound));
  return SymbolString(q, std::move(data));
}

}  // namespace

Instance BuildInstance(const ExperimentConfig& config) {
  config.Validate();
  const std::size_t n = config.ResolvedN();
  const std::uint64_t q = config.ResolvedQ();
  const bool hamming_problem = config.problem == engines::Problem::kHamming;
  Rng fixed_rng = Rng::Substream(config.seed, "gen.fixed");
  Rng stream_rng = Rng::Substream(config.seed, "gen.stream");
  Instance inst;
  json manifest = {{"family", FamilyName(config.family)},
                   {"problem", engines::ProblemName(config.problem)},
                   {"n", n},
                   {"q", q},
                   {"seed", config.seed}};
  switch (config.family) {
    case Family::kRandom:
    case Family::kToeplitzRandom:
      inst.fixed = RandomString(q, n, fixed_rng, false);
      break;
    case Family::kKn:
      inst.fixed = instances::MakeKn(n, q);
      manifest["ones"] = inst.fixed.Count(1);
      break;
    case Family::kKqn: {
      inst.fixed = instances::KqnDigits(q, n);
      const instances::BinaryNumber k = instances::MakeKqn(q, n);
      manifest["decimal"] = k.ToDecimal();
      manifest["bits"] = k.bit_count();
      break;
    }
    case Family::kHamming: {
      instances::HammingConfig hc;
      hc.mu = config.mu;
      hc.gamma = config.gamma;
      hc.n = n;
      hc.q = q;
      hc.seed = config.seed;
      instances::HammingInstance h = instances::BuildHammingInstance(hc);
      const instances::HammingStream s =
          instances::SampleHammingStream(h, n, config.seed);
      inst.fixed = h.F;
      inst.stream = s.U;
      std::size_t from_populate = 0;
      for (const auto& m : h.family.members) {
        from_populate += m.provenance == instances::Provenance::kPopulate;
      }
      manifest["mu"] = h.mu;
      manifest["gamma"] = config.gamma;
      manifest["r"] = h.r;
      manifest["copy_starts"] = h.copy_starts;
      manifest["sum_count"] = h.sum_count;
      manifest["code_size"] = h.code ? h.code->size() : 0;
      manifest["family_size"] = h.family.size();
      manifest["family_from_populate"] = from_populate;
      manifest["family_from_random"] = h.family.size() - from_populate;
      manifest["family_candidates"] = h.family.candidates;
      manifest["draws"] = s.draws;
      inst.hamming = std::move(h);
      break;
    }
  }
  if (inst.stream.empty()) {
    inst.stream = RandomString(q, n, stream_rng, hamming_problem);
  }
  inst.manifest_json = manifest.dump(2);
  return inst;
}

void SaveInstance(const Instance& instance, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WriteStringFile((dir / "fixed.json").string(),
                  StringFile{instance.fixed, Role::kFixed});
  WriteStringFile((dir / "stream.json").string(),
                  StringFile{instance.stream, Role::kStream});
  std::ofstream(dir / "manifest.json") << instance.manifest_json << '\n';
}

Instance LoadInstance(const std::filesystem::path& dir) {
  const StringFile fixed = ReadStringFile((dir / "fixed.json").string());
  const StringFile stream = ReadStringFile((dir / "stream.json").string());
  if (fixed.role != Role::kFixed || stream.role != Role::kStream) {
    throw std::invalid_argument("instance files have unexpected roles");
  }
  Instance inst;
  inst.fixed = fixed.data;
  inst.stream = stream.data;
  std::ifstream in(dir / "manifest.json");
  std::stringstream buf;
  buf << in.rdbuf();
  inst.manifest_json = buf.str();
  return inst;
}

}  // namespace streamlab::cli
