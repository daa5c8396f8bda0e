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

#include "streamlab/probelab/info_transfer.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace streamlab::probelab {
namespace {

constexpr Address kDenseHistory = Address{1} << 20;

}  // namespace

std::string_view VariantName(TransferVariant variant) {
  return variant == TransferVariant::kProbedProbed ? "probed_probed"
                                                   : "written_read";
}

std::uint64_t InfoTransferTree::Size(std::size_t id,
                                     TransferVariant variant) const {
  const NodeTransfer& nt = node(id);
  return variant == TransferVariant::kProbedProbed ? nt.probed_probed
                                                   : nt.written_read;
}

const std::vector<Address>& InfoTransferTree::Cells(
    std::size_t id, TransferVariant variant) const {
  if (!has_sets_) throw std::logic_error("tree was built without cell sets");
  const NodeTransfer& nt = node(id);
  return variant == TransferVariant::kProbedProbed ? nt.probed_probed_cells
                                                   : nt.written_read_cells;
}

InfoTransferAccumulator::InfoTransferAccumulator(std::size_t n, bool keep_sets,
                                                 bool track_written_read)
    : n_(n),
      levels_(0),
      keep_sets_(keep_sets),
      track_wr_(track_written_read),
      pp_(n, 0),
      wr_(n, 0) {
  if (!IsPowerOfTwo(n)) throw std::invalid_argument("n must be a power of two");
  levels_ = FloorLog2(n);
  if (keep_sets_) {
    pp_cells_.resize(n);
    wr_cells_.resize(n);
  }
}

InfoTransferAccumulator::CellHistory& InfoTransferAccumulator::History(
    Address addr) {
  if (addr < kDenseHistory) {
    if (addr >= dense_.size()) {
      dense_.resize(std::max<std::size_t>(static_cast<std::size_t>(addr) + 1,
                                          dense_.size() * 2));
    }
    return dense_[addr];
  }
  return sparse_[addr];
}

void InfoTransferAccumulator::Credit(std::size_t node, Address addr,
                                     TransferVariant variant) {
  if (variant == TransferVariant::kProbedProbed) {
    ++pp_[node];
    if (keep_sets_) pp_cells_[node].push_back(addr);
  } else {
    ++wr_[node];
    if (keep_sets_) wr_cells_[node].push_back(addr);
  }
}

void InfoTransferAccumulator::OnProbe(const ProbeEvent& event) {
  const Epoch e = event.epoch;
  if (e >= n_ || e < last_epoch_) {
    throw std::invalid_argument("malformed trace: epoch " + std::to_string(e) +
                                " after " + std::to_string(last_epoch_) +
                                " with n = " + std::to_string(n_));
  }
  last_epoch_ = e;
  ++probes_;
  if (!track_wr_ && event.addr < kDenseHistory) {
    // Compact path: only the last probe epoch (plus one) per cell.
    const Address addr = event.addr;
    if (addr >= last_probe_.size()) {
      last_probe_.resize(std::max<std::size_t>(
          static_cast<std::size_t>(addr) + 1, last_probe_.size() * 2));
    }
    Epoch& last = last_probe_[addr];
    if (last != 0 && e + 1 > last) {
      const auto level = std::bit_width((last - 1) ^ e);
      Credit((n_ >> level) + ((last - 1) >> level), addr,
             TransferVariant::kProbedProbed);
    }
    last = e + 1;
    return;
  }
  CellHistory& h = History(event.addr);

  if (h.probed && e > h.last_probe) {
    Credit(SplitNode(n_, h.last_probe, e), event.addr,
           TransferVariant::kProbedProbed);
  }
  h.probed = true;
  h.last_probe = e;
  if (!track_wr_) return;

  if (event.op == ProbeOp::kWrite) {
    if (h.writes.empty() || h.writes.back() != e) h.writes.push_back(e);
    return;
  }
  // Only levels whose right interval began after the previous read can see a
  // first read now: those up to the highest bit where e and last_read differ.
  unsigned top = levels_;
  if (h.read) {
    top = std::min<unsigned>(levels_, BitWidth(e ^ h.last_read));
  }
  for (unsigned k = 1; k <= top; ++k) {
    if (((e >> (k - 1)) & 1) == 0) continue;
    const Epoch right_start = (e >> (k - 1)) << (k - 1);
    if (h.read && h.last_read >= right_start) continue;
    const Epoch left_start = (e >> k) << k;
    auto it = std::lower_bound(h.writes.begin(), h.writes.end(), right_start);
    if (it == h.writes.begin()) continue;
    if (*std::prev(it) >= left_start) {
      Credit((n_ >> k) + (e >> k), event.addr, TransferVariant::kWrittenRead);
    }
  }
  h.read = true;
  h.last_read = e;
}

InfoTransferTree InfoTransferAccumulator::Finish() const {
  std::vector<NodeTransfer> nodes;
  nodes.reserve(n_ > 0 ? n_ - 1 : 0);
  for (std::size_t id = 1; id < n_; ++id) {
    NodeTransfer nt;
    nt.window = TreeNode(n_, id);
    nt.probed_probed = pp_[id];
    nt.written_read = wr_[id];
    if (keep_sets_) {
      nt.probed_probed_cells = pp_cells_[id];
      nt.written_read_cells = wr_cells_[id];
      std::sort(nt.probed_probed_cells.begin(), nt.probed_probed_cells.end());
      std::sort(nt.written_read_cells.begin(), nt.written_read_cells.end());
    }
    nodes.push_back(std::move(nt));
  }
  return InfoTransferTree(n_, std::move(nodes), keep_sets_);
}

InfoTransferTree ComputeInfoTransfer(const ProbeTrace& trace, std::size_t n,
                                     bool keep_sets) {
  InfoTransferAccumulator acc(n, keep_sets);
  for (const ProbeEvent& ev : trace.events) acc.OnProbe(ev);
  return acc.Finish();
}

std::uint64_t SumInformationTransfer(const InfoTransferTree& tree,
                                     std::size_t ell_min,
                                     TransferVariant variant) {
  if (!IsPowerOfTwo(ell_min)) {
    throw std::invalid_argument("ell_min must be a power of two");
  }
  std::uint64_t total = 0;
  for (const NodeTransfer& nt : tree.nodes()) {
    if (nt.window.ell < ell_min) continue;
    total += variant == TransferVariant::kProbedProbed ? nt.probed_probed
                                                       : nt.written_read;
  }
  return total;
}

void WriteTreeCsv(std::ostream& out, const InfoTransferTree& tree) {
  out << "node_id,t0,t1,t2,ell,Iv_pp,Iv_wr\n";
  for (const NodeTransfer& nt : tree.nodes()) {
    const ArrivalWindow& v = nt.window;
    out << v.node_id << ',' << v.t0 << ',' << v.t1 << ',' << v.t2 << ','
        << v.ell << ',' << nt.probed_probed << ',' << nt.written_read << '\n';
  }
}

}  // namespace streamlab::probelab
