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

#ifndef STREAMLAB_PROBELAB_TRACE_H_
#define STREAMLAB_PROBELAB_TRACE_H_

#include <ostream>
#include <string>
#include <vector>

#include "streamlab/probelab/cell_store.h"

namespace streamlab::probelab {

struct ProbeTrace {
  std::vector<ProbeEvent> events;

  std::size_t size() const { return events.size(); }
};

class TraceRecorder : public ProbeSink {
 public:
  void OnProbe(const ProbeEvent& event) override {
    trace_.events.push_back(event);
  }
  const ProbeTrace& trace() const { return trace_; }
  ProbeTrace Take() { return std::move(trace_); }

 private:
  ProbeTrace trace_;
};

// Empty when the trace is well formed: epochs non-decreasing and below n.
// Otherwise a description of the first violation.
std::string FindMalformation(const ProbeTrace& trace, std::size_t n);

// Replays the writes of events with epoch <= last_epoch and returns the
// resulting memory. Throws std::logic_error at the first read whose recorded
// value differs from the most recent write (zero if none).
CellSnapshot ReplayTrace(const ProbeTrace& trace, Epoch last_epoch);

// CSV with header `epoch,op,addr,value`.
void WriteTraceCsv(std::ostream& out, const ProbeTrace& trace);

}  // namespace streamlab::probelab

#endif  // STREAMLAB_PROBELAB_TRACE_H_
