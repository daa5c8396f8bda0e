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

#include "streamlab/probelab/trace.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace streamlab::probelab {

std::string FindMalformation(const ProbeTrace& trace, std::size_t n) {
  Epoch previous = 0;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const Epoch e = trace.events[i].epoch;
    if (e >= n) {
      return "event " + std::to_string(i) + " has epoch " + std::to_string(e) +
             " >= n = " + std::to_string(n);
    }
    if (e < previous) {
      return "event " + std::to_string(i) + " has epoch " + std::to_string(e) +
             " after epoch " + std::to_string(previous);
    }
    previous = e;
  }
  return {};
}

CellSnapshot ReplayTrace(const ProbeTrace& trace, Epoch last_epoch) {
  std::map<Address, Word> memory;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const ProbeEvent& ev = trace.events[i];
    if (ev.epoch > last_epoch) break;
    if (ev.op == ProbeOp::kWrite) {
      memory[ev.addr] = ev.value;
      continue;
    }
    auto it = memory.find(ev.addr);
    const Word expected = it == memory.end() ? 0 : it->second;
    if (expected != ev.value) {
      throw std::logic_error("event " + std::to_string(i) + " reads " +
                             std::to_string(ev.value) + " from cell " +
                             std::to_string(ev.addr) + " but replay holds " +
                             std::to_string(expected));
    }
  }
  return CellSnapshot(memory.begin(), memory.end());
}

void WriteTraceCsv(std::ostream& out, const ProbeTrace& trace) {
  out << "epoch,op,addr,value\n";
  for (const ProbeEvent& ev : trace.events) {
    out << ev.epoch << ',' << (ev.op == ProbeOp::kRead ? "read" : "write")
        << ',' << ev.addr << ',' << ev.value << '\n';
  }
}

}  // namespace streamlab::probelab
