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

#include "cli/commands.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <stdexcept>

#include "cli/instance.h"
#include "cli/suites.h"
#include "json.hpp"
#include "streamlab/core/rng.h"
#include "streamlab/witnesses/decode.h"

namespace streamlab::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

fs::path PrepareOut(const ExperimentConfig& config) {
  const fs::path dir = config.OutputDir();
  fs::create_directories(dir);
  return dir;
}

json ConfigEcho(const ExperimentConfig& c) {
  return {{"command", c.command},
          {"problem", engines::ProblemName(c.problem)},
          {"algorithm", engines::AlgorithmName(c.algorithm)},
          {"n", c.ResolvedN()},
          {"q", c.ResolvedQ()},
          {"w", c.w},
          {"seed", c.seed},
          {"family", FamilyName(c.family)},
          {"trials", c.trials},
          {"instance", c.instance}};
}

void CheckCompatible(const ExperimentConfig& c, const Instance& inst) {
  const SymbolString& F = inst.fixed;
  const SymbolString& U = inst.stream;
  auto mismatch = [](const std::string& why) {
    return std::invalid_argument("processor/instance mismatch: " + why);
  };
  if (F.size() != U.size()) {
    throw mismatch("fixed length " + std::to_string(F.size()) +
                   " differs from stream length " + std::to_string(U.size()));
  }
  if (F.alphabet() != U.alphabet()) {
    throw mismatch("fixed alphabet " + std::to_string(F.alphabet()) +
                   " differs from stream alphabet " +
                   std::to_string(U.alphabet()));
  }
  if (c.problem == engines::Problem::kHamming &&
      U.Count(StarSymbol(U.alphabet())) != 0) {
    throw mismatch("the stream contains the symbol reserved for the fixed "
                   "string; regenerate it with --problem hamming");
  }
}

}  // namespace

int CmdGen(const ExperimentConfig& config, std::ostream& log) {
  const Instance inst = BuildInstance(config);
  const fs::path dir = PrepareOut(config);
  SaveInstance(inst, dir);
  log << "wrote fixed.json, stream.json, manifest.json to " << dir.string()
      << '\n'
      << inst.manifest_json << '\n';
  return 0;
}

int CmdRun(const ExperimentConfig& config, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  const Instance inst = config.instance.empty() ? BuildInstance(config)
                                                : LoadInstance(config.instance);
  CheckCompatible(config, inst);
  engines::FastOptions options;
  options.smallest_block = config.smallest_block;
  const auto proc = engines::MakeProcessor(
      config.problem, config.algorithm, inst.fixed,
      Params::Create(inst.fixed.size(), inst.fixed.alphabet(), config.w),
      options);
  const TracedRun run = RunTraced(*proc, inst.stream, config.write_trace);
  const OutputArray want =
      engines::ReferenceOutputs(config.problem, inst.fixed, inst.stream);
  const bool outputs_ok = run.outputs == want;
  const std::size_t n = inst.fixed.size();

  const fs::path dir = PrepareOut(config);
  {
    std::ofstream out(dir / "outputs.csv");
    out << "t,x,A_t\n";
    for (std::size_t t = 0; t < n; ++t) {
      out << t << ',' << inst.stream[t] << ',' << run.outputs[t] << '\n';
    }
  }
  {
    std::ofstream out(dir / "tree.csv");
    probelab::WriteTreeCsv(out, run.tree);
  }
  if (config.write_trace) {
    std::ofstream out(dir / "trace.csv");
    probelab::WriteTraceCsv(out, run.trace);
  }
  json kernels = json::object();
  for (std::size_t k = 0; k < engines::kKernelKinds; ++k) {
    const auto kind = static_cast<engines::KernelKind>(k);
    kernels[std::string(engines::KernelName(kind))] = run.kernels.calls_of(kind);
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  ExperimentConfig echo = config;
  echo.n = n;
  echo.q = inst.fixed.alphabet();
  json report = {
      {"config", ConfigEcho(echo)},
      {"totals",
       {{"probes", run.probes},
        {"reads", run.reads},
        {"writes", run.writes},
        {"sum_iv_probed_probed", run.sum_iv_pp},
        {"sum_iv_written_read", run.sum_iv_wr},
        {"amortized_probes_per_output",
         static_cast<double>(run.probes) / static_cast<double>(n)},
        {"cells", proc->cell_count()},
        {"required_width", proc->required_width()},
        {"kernel_calls", kernels},
        {"kernel_multiplications", run.kernels.multiplications}}},
      {"files",
       {{"outputs", (dir / "outputs.csv").string()},
        {"tree", (dir / "tree.csv").string()},
        {"trace", config.write_trace ? (dir / "trace.csv").string() : ""}}},
      {"checks",
       {{"counting_bound", run.counting_bound_ok() ? "PASS" : "FAIL"},
        {"outputs_match_reference", outputs_ok ? "PASS" : "FAIL"}}},
      {"wall_seconds", seconds}};
  std::ofstream(dir / "report.json") << report.dump(2) << '\n';
  log << "probes=" << run.probes << " sum_iv_pp=" << run.sum_iv_pp
      << " sum_iv_wr=" << run.sum_iv_wr << '\n'
      << (run.counting_bound_ok() ? "PASS" : "FAIL") << " counting-bound\n"
      << (outputs_ok ? "PASS" : "FAIL") << " outputs-match-reference\n"
      << "report: " << (dir / "report.json").string() << '\n';
  return run.counting_bound_ok() && outputs_ok ? 0 : 1;
}

int CmdVerify(const ExperimentConfig& config, std::ostream& log) {
  const SuiteResult result = RunSuite(config.suite, config);
  const fs::path dir = PrepareOut(config);
  {
    std::ofstream out(dir / "decode.csv");
    witnesses::WriteDecodeCsv(out, result.decodes);
  }
  json lines = json::array();
  for (const SuiteLine& line : result.lines) {
    log << StatusName(line.status) << ' ' << line.name << ": " << line.detail
        << '\n';
    lines.push_back({{"name", line.name},
                     {"status", StatusName(line.status)},
                     {"detail", line.detail}});
  }
  json summary = {{"config", ConfigEcho(config)},
                  {"suite", config.suite},
                  {"lines", lines},
                  {"failed", result.failed()}};
  std::ofstream(dir / "verify.json") << summary.dump(2) << '\n';
  return result.failed() ? 1 : 0;
}

std::vector<SweepRow> RunSweep(engines::Problem problem,
                               const std::vector<engines::Algorithm>& algos,
                               const std::vector<std::size_t>& ns,
                               std::uint64_t q, unsigned w,
                               std::uint64_t seed) {
  std::vector<SweepRow> rows;
  const std::uint64_t bound =
      problem == engines::Problem::kHamming ? q - 1 : q;
  for (std::size_t n : ns) {
    Rng rng = Rng::Substream(seed, "sweep.n" + std::to_string(n));
    std::vector<Symbol> f(n);
    std::vector<Symbol> u(n);
    for (Symbol& x : f) x = static_cast<Symbol>(rng.Uniform(q));
    for (Symbol& x : u) x = static_cast<Symbol>(rng.Uniform(bound));
    const SymbolString F(q, std::move(f));
    const SymbolString U(q, std::move(u));
    for (engines::Algorithm algo : algos) {
      const auto proc = engines::MakeProcessor(problem, algo, F,
                                               Params::Create(n, q, w));
      const TracedRun run = RunTraced(*proc, U, false);
      SweepRow row;
      row.n = n;
      row.algorithm = algo;
      row.probes = run.probes;
      row.sum_iv_pp = run.sum_iv_pp;
      row.sum_iv_wr = run.sum_iv_wr;
      row.amortized_probes =
          static_cast<double>(run.probes) / static_cast<double>(n);
      row.amortized_iv =
          static_cast<double>(run.sum_iv_pp) / static_cast<double>(n);
      row.counting_bound_ok = run.counting_bound_ok();
      rows.push_back(row);
    }
  }
  return rows;
}

bool AmortizedNondecreasing(const std::vector<SweepRow>& rows,
                            engines::Algorithm algo) {
  std::vector<const SweepRow*> mine;
  for (const SweepRow& row : rows) {
    if (row.algorithm == algo) mine.push_back(&row);
  }
  std::sort(mine.begin(), mine.end(),
            [](const SweepRow* a, const SweepRow* b) { return a->n < b->n; });
  for (std::size_t i = 1; i < mine.size(); ++i) {
    if (mine[i]->amortized_iv < mine[i - 1]->amortized_iv) return false;
  }
  return true;
}

void WriteSweepCsv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n,algo,probes,sum_iv_pp,sum_iv_wr,amortized_probes,amortized_iv,"
         "counting_bound_ok\n";
  for (const SweepRow& r : rows) {
    out << r.n << ',' << engines::AlgorithmName(r.algorithm) << ','
        << r.probes << ',' << r.sum_iv_pp << ',' << r.sum_iv_wr << ','
        << r.amortized_probes << ',' << r.amortized_iv << ','
        << (r.counting_bound_ok ? 1 : 0) << '\n';
  }
}

int CmdSweep(const ExperimentConfig& config, std::ostream& log) {
  const std::vector<engines::Algorithm> algos = {engines::Algorithm::kNaive,
                                                 engines::Algorithm::kFast};
  const std::vector<SweepRow> rows = RunSweep(
      config.problem, algos, config.ns, config.ResolvedQ(), config.w,
      config.seed);
  const fs::path dir = PrepareOut(config);
  {
    std::ofstream out(dir / "sweep.csv");
    WriteSweepCsv(out, rows);
  }
  WriteSweepCsv(log, rows);
  bool bound_ok = true;
  for (const SweepRow& r : rows) bound_ok = bound_ok && r.counting_bound_ok;
  for (engines::Algorithm algo : algos) {
    const bool mono = AmortizedNondecreasing(rows, algo);
    log << (mono ? "PASS" : "WARN") << " amortized-nondecreasing."
        << engines::AlgorithmName(algo) << '\n';
  }
  log << (bound_ok ? "PASS" : "FAIL") << " counting-bound\n";
  return bound_ok ? 0 : 1;
}

}  // namespace streamlab::cli
