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

#ifndef STREAMLAB_PROBELAB_INFO_TRANSFER_H_
#define STREAMLAB_PROBELAB_INFO_TRANSFER_H_

#include <cstdint>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "streamlab/core/window.h"
#include "streamlab/probelab/trace.h"

namespace streamlab::probelab {

// kProbedProbed: cells probed in [t0, t1] and probed again in [t1 + 1, t2].
// kWrittenRead: cells written in [t0, t1] and read in [t1 + 1, t2]; this is
// the set the encoding in encoding.h ships. It is a subset of the former.
enum class TransferVariant { kProbedProbed, kWrittenRead };

std::string_view VariantName(TransferVariant variant);

struct NodeTransfer {
  ArrivalWindow window;
  std::uint64_t probed_probed = 0;
  std::uint64_t written_read = 0;
  // Sorted addresses; filled only when sets were requested.
  std::vector<Address> probed_probed_cells;
  std::vector<Address> written_read_cells;
};

class InfoTransferTree {
 public:
  InfoTransferTree() = default;
  InfoTransferTree(std::size_t n, std::vector<NodeTransfer> nodes,
                   bool has_sets)
      : n_(n), nodes_(std::move(nodes)), has_sets_(has_sets) {}

  std::size_t n() const { return n_; }
  bool has_sets() const { return has_sets_; }
  // Internal nodes in id order; nodes()[id - 1] is node `id`.
  const std::vector<NodeTransfer>& nodes() const { return nodes_; }
  const NodeTransfer& node(std::size_t id) const { return nodes_.at(id - 1); }

  std::uint64_t Size(std::size_t id, TransferVariant variant) const;
  const std::vector<Address>& Cells(std::size_t id,
                                    TransferVariant variant) const;

 private:
  std::size_t n_ = 0;
  std::vector<NodeTransfer> nodes_;
  bool has_sets_ = false;
};

// Streaming computation of both transfer variants for every node.
//
// Probed/probed: for a cell, take the sorted distinct epochs at which it is
// probed. The cell belongs to node v exactly when two consecutive epochs of
// that list straddle v's midpoint inside v's window, and then v is the split
// node of that pair. Each consecutive pair therefore credits one node, which
// is also why the grand total never exceeds the number of probes.
//
// Written/read: on the first read of a cell inside some right interval, the
// node is credited if the cell's last write before that interval falls in the
// matching left interval.
class InfoTransferAccumulator : public ProbeSink {
 public:
  // With track_written_read false only the probed/probed variant is kept
  // (written/read sizes stay zero), which is several times cheaper.
  InfoTransferAccumulator(std::size_t n, bool keep_sets,
                          bool track_written_read = true);

  // Throws std::invalid_argument on an epoch >= n or a decreasing epoch.
  void OnProbe(const ProbeEvent& event) override;

  std::uint64_t probes() const { return probes_; }
  InfoTransferTree Finish() const;

 private:
  struct CellHistory {
    bool probed = false;
    bool read = false;
    Epoch last_probe = 0;
    Epoch last_read = 0;
    std::vector<Epoch> writes;  // distinct, increasing
  };

  CellHistory& History(Address addr);
  void Credit(std::size_t node, Address addr, TransferVariant variant);

  std::size_t n_;
  unsigned levels_;
  bool keep_sets_;
  bool track_wr_;
  Epoch last_epoch_ = 0;
  std::uint64_t probes_ = 0;
  std::vector<CellHistory> dense_;
  std::vector<Epoch> last_probe_;  // probed/probed-only mode, epoch + 1
  std::unordered_map<Address, CellHistory> sparse_;
  std::vector<std::uint64_t> pp_;
  std::vector<std::uint64_t> wr_;
  std::vector<std::vector<Address>> pp_cells_;
  std::vector<std::vector<Address>> wr_cells_;
};

// Throws std::invalid_argument on a malformed trace.
InfoTransferTree ComputeInfoTransfer(const ProbeTrace& trace, std::size_t n,
                                     bool keep_sets = true);

// Sum of I_v over internal nodes with ell_v >= ell_min (a power of two).
std::uint64_t SumInformationTransfer(
    const InfoTransferTree& tree, std::size_t ell_min,
    TransferVariant variant = TransferVariant::kProbedProbed);

// CSV with header `node_id,t0,t1,t2,ell,Iv_pp,Iv_wr`.
void WriteTreeCsv(std::ostream& out, const InfoTransferTree& tree);

}  // namespace streamlab::probelab

#endif  // STREAMLAB_PROBELAB_INFO_TRANSFER_H_
