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

#include "cli/suites.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "streamlab/core/rng.h"
#include "streamlab/core/window.h"
#include "streamlab/instances/cyclic_code.h"
#include "streamlab/instances/hamming.h"
#include "streamlab/instances/kn.h"
#include "streamlab/instances/toeplitz.h"
#include "streamlab/instances/vector_multiset.h"
#include "streamlab/probelab/cell_store.h"
#include "streamlab/probelab/encoding.h"
#include "streamlab/witnesses/mult.h"
#include "streamlab/witnesses/sums.h"

namespace streamlab::cli {
namespace {

using engines::Algorithm;
using engines::Problem;
using probelab::CellStore;

constexpr Problem kProblems[] = {Problem::kConvolution,
                                 Problem::kMultiplication, Problem::kHamming};

std::size_t Or(std::size_t value, std::size_t fallback) {
  return value != 0 ? value : fallback;
}

SymbolString RandomString(std::uint64_t q, std::size_t n, Rng& rng,
                          std::uint64_t bound) {
  std::vector<Symbol> data(n);
  for (Symbol& x : data) x = static_cast<Symbol>(rng.Uniform(bound));
  return SymbolString(q, std::move(data));
}

// Stream symbols usable for a problem: STAR is reserved for Hamming.
std::uint64_t StreamBound(Problem problem, std::uint64_t q) {
  return problem == Problem::kHamming ? q - 1 : q;
}

std::unique_ptr<engines::OnlineProcessor> Make(Problem problem,
                                               Algorithm algorithm,
                                               const SymbolString& F,
                                               const ExperimentConfig& c) {
  engines::FastOptions options;
  options.smallest_block = c.smallest_block;
  return engines::MakeProcessor(problem, algorithm, F,
                                Params::Create(F.size(), F.alphabet(), c.w),
                                options);
}

class Suite {
 public:
  explicit Suite(SuiteResult& result) : result_(result) {}

  TracedRun Run(const engines::OnlineProcessor& p, const SymbolString& U) {
    TracedRun run = RunTraced(p, U, false);
    ++result_.traced_runs;
    if (!run.counting_bound_ok()) result_.counting_bound_ok = false;
    return run;
  }

  void Line(std::string name, Status status, std::string detail) {
    result_.lines.push_back({std::move(name), status, std::move(detail)});
  }
  void Check(std::string name, bool ok, std::string detail) {
    Line(std::move(name), ok ? Status::kPass : Status::kFail,
         std::move(detail));
  }
  void Decode(witnesses::DecodeReport report) {
    result_.decodes.push_back(std::move(report));
  }

 private:
  SuiteResult& result_;
};

void ConvKn(const ExperimentConfig& c, Suite& s) {
  const std::size_t n = Or(c.n, 16);
  const std::uint64_t q = Or(c.q, 5);
  const SymbolString F = instances::MakeKn(n, q);
  const auto proc = Make(Problem::kConvolution, c.algorithm, F, c);
  Rng rng = Rng::Substream(c.seed, "verify.conv_kn");
  std::size_t decoded = 0;
  std::size_t failures = 0;
  std::string first;
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const SymbolString U = RandomString(q, n, rng, q);
    const TracedRun run = s.Run(*proc, U);
    for (const ArrivalWindow& v : TreeNodes(n)) {
      witnesses::DecodeReport rep = witnesses::DecodeConvKn(
          SliceAv(run.outputs, v), v, F, MaskUv(U, v, 0));
      const bool ok = rep.ok && witnesses::MatchesTruth(rep, U);
      ++decoded;
      if (!ok) {
        ++failures;
        if (first.empty()) {
          first = "node " + std::to_string(v.node_id) + " trial " +
                  std::to_string(trial) + ": " + rep.detail;
        }
      }
      if (trial == 0) s.Decode(std::move(rep));
    }
  }
  std::ostringstream d;
  d << "n=" << n << " q=" << q << " trials=" << c.trials << " nodes decoded="
    << decoded << " failures=" << failures;
  if (!first.empty()) d << " first: " << first;
  s.Check("conv-kn", failures == 0, d.str());
}

void ToeplitzFraction(const ExperimentConfig& c, Suite& s) {
  const std::uint64_t q = Or(c.q, 2);
  const instances::Rational got =
      instances::ToeplitzNonsingularFraction(q, c.ell);
  const instances::Rational want = instances::Rational::Reduced(q - 1, q);
  s.Check("toeplitz-fraction", got == want,
          "q=" + std::to_string(q) + " ell=" + std::to_string(c.ell) +
              " fraction=" + got.ToString() + " expected=" + want.ToString());
}

void ToeplitzDecode(const ExperimentConfig& c, Suite& s) {
  const std::size_t n = Or(c.n, 16);
  const std::uint64_t q = Or(c.q, 3);
  Rng rng = Rng::Substream(c.seed, "verify.toeplitz_decode");
  std::size_t exact = 0;
  std::size_t singular = 0;
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < c.trials; ++trial) {
    const SymbolString F = RandomString(q, n, rng, q);
    const SymbolString U = RandomString(q, n, rng, q);
    const auto proc = Make(Problem::kConvolution, c.algorithm, F, c);
    const TracedRun run = s.Run(*proc, U);
    for (const ArrivalWindow& v : TreeNodes(n)) {
      witnesses::DecodeReport rep = witnesses::DecodeConvToeplitz(
          SliceAv(run.outputs, v), v, F, MaskUv(U, v, 0));
      if (!rep.ok) {
        // Only a singular system may refuse to decode.
        const bool sing = !instances::BuildToeplitz(F, v.half()).Nonsingular();
        singular += sing;
        failures += !sing;
      } else if (witnesses::MatchesTruth(rep, U) &&
                 rep.recovered.size() == v.half()) {
        ++exact;
      } else {
        ++failures;
      }
      if (trial == 0) s.Decode(std::move(rep));
    }
  }
  s.Check("toeplitz-decode", failures == 0,
          "n=" + std::to_string(n) + " q=" + std::to_string(q) +
              " exact=" + std::to_string(exact) + " singular=" +
              std::to_string(singular) + " failures=" +
              std::to_string(failures));
}

void EncodeRoundtrip(const ExperimentConfig& c, Suite& s) {
  const std::size_t n = Or(c.n, 32);
  const std::uint64_t q = Or(c.q, 5);
  Rng rng = Rng::Substream(c.seed, "verify.encode");
  for (Problem problem : kProblems) {
    std::size_t nodes = 0;
    std::size_t failures = 0;
    std::uint64_t max_bits = 0;
    std::string first;
    for (std::size_t trial = 0; trial < c.trials; ++trial) {
      const SymbolString F = RandomString(q, n, rng, q);
      const SymbolString U =
          RandomString(q, n, rng, StreamBound(problem, q));
      const auto proc = Make(problem, c.algorithm, F, c);
      CellStore store(proc->params().w);
      probelab::TraceRecorder recorder;
      store.AddSink(&recorder);
      const OutputArray A = engines::RunStream(*proc, store, U);
      const probelab::ProbeTrace truth = recorder.Take();
      const auto encodings = probelab::EncodeAllNodes(*proc, U);
      for (const probelab::IvEncoding& enc : encodings) {
        const ArrivalWindow v = TreeNode(n, enc.node_id);
        ++nodes;
        max_bits = std::max(max_bits, enc.bit_size());
        try {
          const OutputArray got =
              probelab::DecodeAv(*proc, MaskUv(U, v, 0), enc, &truth);
          if (got != SliceAv(A, v)) {
            ++failures;
            if (first.empty()) first = "node " + std::to_string(v.node_id);
          }
        } catch (const probelab::DecodeError& e) {
          ++failures;
          if (first.empty()) first = e.what();
        }
      }
    }
    std::string detail = std::string(engines::ProblemName(problem)) +
                         " n=" + std::to_string(n) + " nodes=" +
                         std::to_string(nodes) + " failures=" +
                         std::to_string(failures) +
                         " max_encoding_bits=" + std::to_string(max_bits);
    if (!first.empty()) detail += " first: " + first;
    s.Check("encode-roundtrip." + std::string(engines::ProblemName(problem)),
            failures == 0, detail);
  }
}

std::vector<bool> Reversed(std::vector<bool> bits) {
  std::reverse(bits.begin(), bits.end());
  return bits;
}

void Kqn(const ExperimentConfig&, Suite& s) {
  const instances::BinaryNumber k = instances::MakeKqn(16, 8);
  s.Check("kqn.value",
          k.ToDecimal() == "65814" && k.ToPowerOfTwoBase(4) == "10116",
          "K_{16,8} decimal=" + k.ToDecimal() +
              " hex=" + k.ToPowerOfTwoBase(4));
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (std::uint64_t q : {2, 4, 16}) {
    const unsigned bits_per_digit = FloorLog2(q);
    for (std::size_t n = 1; n <= 32; ++n) {
      const std::size_t m = n * bits_per_digit;
      if (m < 2) continue;
      const SymbolString kn = instances::MakeKn(m, 2);
      const std::vector<bool> rev = Reversed(instances::MakeKqn(q, n).bits());
      bool same = rev.size() == m;
      for (std::size_t i = 0; same && i < m; ++i) same = rev[i] == (kn[i] == 1);
      ++checked;
      failures += !same;
    }
  }
  s.Check("kqn.reversal", failures == 0,
          "pairs=" + std::to_string(checked) +
              " failures=" + std::to_string(failures));
}

void Hamming(const ExperimentConfig& c, Suite& s) {
  instances::HammingConfig hc;
  hc.mu = c.mu;
  hc.gamma = c.gamma;
  hc.n = c.n;
  hc.q = c.q;
  hc.seed = c.seed;
  const instances::HammingInstance inst = instances::BuildHammingInstance(hc);
  const std::size_t n = inst.n;
  const auto proc = Make(Problem::kHamming, c.algorithm, inst.F, c);
  const std::size_t min_ell =
      static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::size_t nodes = 0;
  std::size_t blocks = 0;
  std::size_t failures = 0;
  std::string first;
  for (std::size_t trial = 0; trial < std::max<std::size_t>(1, c.trials);
       ++trial) {
    const instances::HammingStream stream =
        instances::SampleHammingStream(inst, n, c.seed + trial);
    const TracedRun run = s.Run(*proc, stream.U);
    for (const ArrivalWindow& v : TreeNodes(n)) {
      if (v.ell < min_ell) continue;
      ++nodes;
      witnesses::DecodeReport rep = witnesses::DecodeHammingBlocks(
          SliceAv(run.outputs, v), v, inst, MaskUv(stream.U, v, 0));
      bool ok = rep.ok;
      for (const auto& [block, member] : rep.blocks) {
        ++blocks;
        if (stream.draws.at(block) != member) ok = false;
      }
      if (!ok) {
        ++failures;
        if (first.empty()) {
          first = "node " + std::to_string(v.node_id) + ": " + rep.detail;
        }
      }
      if (trial == 0) s.Decode(std::move(rep));
    }
  }
  std::ostringstream d;
  d << "mu=" << inst.mu << " n=" << n << " q=" << inst.q << " r=" << inst.r
    << " family=" << inst.family.size() << " nodes=" << nodes
    << " blocks=" << blocks << " failures=" << failures;
  if (!first.empty()) d << " first: " << first;
  s.Check("hamming", failures == 0 && blocks > 0, d.str());
}

void CyclicCodes(const ExperimentConfig& c, Suite& s) {
  std::vector<unsigned> mus;
  if (c.mu == 4 || c.mu == 6) {
    mus = {c.mu};
  } else {
    mus = {4, 6};
  }
  for (unsigned mu : mus) {
    const instances::CyclicCode code = instances::SearchCyclicCode(mu, c.gamma);
    const instances::CodeCheck check = instances::CheckCyclicCode(code);
    s.Check("cyclic-code.mu" + std::to_string(mu), check.ok(),
            "size=" + std::to_string(code.size()) + " bound=" +
                std::to_string(code.size_bound) + " " + check.Describe());
  }
}

void Sums(const ExperimentConfig& c, Suite& s) {
  Rng rng = Rng::Substream(c.seed, "verify.sums");
  for (unsigned mu : {2u, 3u, 4u}) {
    std::size_t windows = 0;
    std::size_t failures = 0;
    for (std::size_t trial = 0; trial < std::max<std::size_t>(1, c.trials);
         ++trial) {
      const instances::VectorMultiset V = instances::RandomVectorMultiset(mu, rng);
      const std::uint64_t q = std::uint64_t{mu} * mu + 2;
      instances::UprimeBuilder builder(V, q);
      while (!builder.done()) {
        const std::vector<bool> blocked = builder.BlockedForNextRound();
        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < V.size(); ++i) {
          if (!blocked[i]) free.push_back(i);
        }
        std::vector<std::size_t> pick;
        while (pick.size() < mu && !free.empty()) {
          const std::size_t j = rng.Uniform(free.size());
          pick.push_back(free[j]);
          free.erase(free.begin() + static_cast<std::ptrdiff_t>(j));
        }
        std::sort(pick.begin(), pick.end());
        builder.AddRound(pick);
      }
      const std::vector<Word> ham =
          instances::HamArray(builder.R(), builder.Uprime());
      const std::size_t r = builder.R().size();
      for (const instances::PopulateRound& round : builder.rounds()) {
        for (unsigned m = 1; m <= mu; ++m) {
          ++windows;
          if (ham.at(round.alignment + m) != r - round.sum.at(mu - m)) {
            ++failures;
          }
        }
      }
    }
    s.Check("sums.identity.mu" + std::to_string(mu), failures == 0,
            "windows=" + std::to_string(windows) +
                " failures=" + std::to_string(failures));
  }
  const instances::MultisetSearch search =
      instances::SearchVectorMultiset(3, 8, c.seed);
  s.Line("sums.count.mu3", Status::kPass,
         "|V|=" + std::to_string(search.best.size()) +
             " |Sum(V)|=" + std::to_string(search.best_sum_count));
}

void MultAmbiguityExperiment(const ExperimentConfig& c, Suite& s) {
  const std::size_t n = 8;
  const SymbolString F = instances::KqnDigits(2, n);
  Rng rng = Rng::Substream(c.seed, "verify.mult_ambiguity");
  std::uint64_t worst = 0;
  for (std::size_t trial = 0; trial < std::max<std::size_t>(1, c.trials);
       ++trial) {
    const SymbolString U = RandomString(2, n, rng, 2);
    for (const ArrivalWindow& v : TreeNodes(n)) {
      worst = std::max(worst,
                       witnesses::MultAmbiguity(F, v, U).ambiguity);
    }
  }
  s.Line("mult-ambiguity.kqn", worst <= 2 ? Status::kPass : Status::kWarn,
         "F=K_{2,8} max ambiguity=" + std::to_string(worst) + " expected<=2");
  for (std::size_t ell : {2, 4}) {
    const witnesses::FFraction f = witnesses::MultFFraction(2, ell, 4);
    const bool ok = 2 * f.qualifying >= f.total;
    s.Line("mult-ambiguity.f_fraction.ell" + std::to_string(ell),
           ok ? Status::kPass : Status::kWarn,
           "fraction=" + f.fraction.ToString() + " expected>=1/2");
  }
}

// Counts mismatches between naive, fast and the reference on one pair.
bool Agree(Problem problem, const SymbolString& F, const SymbolString& U,
           const ExperimentConfig& c) {
  const OutputArray want = engines::ReferenceOutputs(problem, F, U);
  for (Algorithm algo : {Algorithm::kNaive, Algorithm::kFast}) {
    const auto proc = Make(problem, algo, F, c);
    CellStore store(proc->params().w);
    if (engines::RunStream(*proc, store, U) != want) return false;
  }
  return true;
}

// Calls fn on every string of length n over [bound], as symbols of [q].
void ForAllStrings(std::uint64_t q, std::size_t n, std::uint64_t bound,
                   const std::function<void(const SymbolString&)>& fn) {
  std::vector<Symbol> d(n, 0);
  while (true) {
    fn(SymbolString(q, d));
    std::size_t i = 0;
    while (i < n && ++d[i] == bound) d[i++] = 0;
    if (i == n) return;
  }
}

void Equivalence(const ExperimentConfig& c, Suite& s) {
  const std::size_t n = Or(c.n, 8);
  const std::uint64_t q = Or(c.q, 3);
  Rng rng = Rng::Substream(c.seed, "verify.equivalence");
  for (Problem problem : kProblems) {
    const std::uint64_t ub = StreamBound(problem, q);
    const double f_space = std::pow(static_cast<double>(q), double(n));
    const double u_space = std::pow(static_cast<double>(ub), double(n));
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::string plan;
    auto check = [&](const SymbolString& F, const SymbolString& U) {
      ++cases;
      mismatches += !Agree(problem, F, U, c);
    };
    if (f_space * u_space <= double(1 << 17)) {
      plan = "all pairs";
      ForAllStrings(q, n, q, [&](const SymbolString& F) {
        ForAllStrings(q, n, ub, [&](const SymbolString& U) { check(F, U); });
      });
    } else if (u_space <= double(1 << 16)) {
      plan = "all streams x 4 fixed";
      for (int k = 0; k < 4; ++k) {
        const SymbolString F = RandomString(q, n, rng, q);
        ForAllStrings(q, n, ub, [&](const SymbolString& U) { check(F, U); });
      }
    } else {
      plan = "random pairs";
      for (std::size_t t = 0; t < c.trials; ++t) {
        check(RandomString(q, n, rng, q), RandomString(q, n, rng, ub));
      }
    }
    s.Check("equivalence." + std::string(engines::ProblemName(problem)),
            mismatches == 0,
            "n=" + std::to_string(n) + " q=" + std::to_string(q) + " plan=" +
                plan + " cases=" + std::to_string(cases) +
                " mismatches=" + std::to_string(mismatches));
  }
}

using SuiteFn = void (*)(const ExperimentConfig&, Suite&);

const std::map<std::string, SuiteFn>& Registry() {
  static const auto* registry = new std::map<std::string, SuiteFn>{
      {"conv-kn", &ConvKn},
      {"toeplitz-fraction", &ToeplitzFraction},
      {"toeplitz-decode", &ToeplitzDecode},
      {"encode-roundtrip", &EncodeRoundtrip},
      {"kqn", &Kqn},
      {"hamming", &Hamming},
      {"cyclic-code", &CyclicCodes},
      {"sums", &Sums},
      {"mult-ambiguity", &MultAmbiguityExperiment},
      {"equivalence", &Equivalence},
  };
  return *registry;
}

}  // namespace

std::string_view StatusName(Status status) {
  switch (status) {
    case Status::kPass:
      return "PASS";
    case Status::kFail:
      return "FAIL";
    case Status::kWarn:
      return "WARN";
  }
  return "?";
}

bool SuiteResult::failed() const {
  if (!counting_bound_ok) return true;
  return std::any_of(lines.begin(), lines.end(), [](const SuiteLine& l) {
    return l.status == Status::kFail;
  });
}

TracedRun RunTraced(const engines::OnlineProcessor& processor,
                    const SymbolString& U, bool keep_trace,
                    bool track_written_read) {
  const std::size_t n = processor.params().n;
  CellStore store(processor.params().w);
  probelab::ProbeCounter counter;
  probelab::InfoTransferAccumulator acc(n, false, track_written_read);
  probelab::TraceRecorder recorder;
  store.AddSink(&counter);
  store.AddSink(&acc);
  if (keep_trace) store.AddSink(&recorder);
  TracedRun run;
  run.outputs = engines::RunStream(processor, store, U, 0, &run.kernels);
  run.probes = store.probe_count();
  run.reads = counter.reads;
  run.writes = counter.writes;
  run.tree = acc.Finish();
  run.sum_iv_pp = probelab::SumInformationTransfer(
      run.tree, 2, probelab::TransferVariant::kProbedProbed);
  run.sum_iv_wr = probelab::SumInformationTransfer(
      run.tree, 2, probelab::TransferVariant::kWrittenRead);
  if (keep_trace) run.trace = recorder.Take();
  return run;
}

const std::vector<std::string>& SuiteNames() {
  static const auto* names = [] {
    auto* v = new std::vector<std::string>;
    for (const auto& [name, fn] : Registry()) v->push_back(name);
    return v;
  }();
  return *names;
}

SuiteResult RunSuite(const std::string& name, const ExperimentConfig& config) {
  SuiteResult result;
  Suite suite(result);
  if (name == "all") {
    for (const auto& [suite_name, fn] : Registry()) fn(config, suite);
  } else {
    auto it = Registry().find(name);
    if (it == Registry().end()) {
      throw std::invalid_argument("unknown suite '" + name + "'");
    }
    it->second(config, suite);
  }
  suite.Line("counting-bound",
             result.counting_bound_ok ? Status::kPass : Status::kFail,
             "traced runs=" + std::to_string(result.traced_runs));
  return result;
}

}  // namespace streamlab::cli
