// Copyright 2026 The qramsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qram/state.hpp"
#include "qram/tree.hpp"

namespace qram {

// Classical simulations enumerate every element; keep them tractable.
inline constexpr int kMaxClassicalDepth = 20;

enum class ClassicalArchitecture : std::uint8_t { Fanout, ModifiedFanout, BucketBrigade };

std::string_view architecture_name(ClassicalArchitecture a);

/// Outcome of one classical memory call.
struct ActivationTrace {
  ClassicalArchitecture architecture = ClassicalArchitecture::Fanout;
  int n = 0;
  Address k = 0;
  std::vector<std::uint64_t> activated_elements;  // sorted element ids
  std::uint64_t activated_count = 0;
  std::uint64_t total_elements = 0;
  std::vector<std::uint64_t> on_path_elements;  // activated and carrying the signal
  std::uint64_t on_path_count = 0;
  std::uint64_t waiting_trits = 0;  // bucket brigade only
  int time_steps = 0;
  Address addressed_leaf = 0;
  // Elements wired to each index bit (fanout variants).
  std::vector<std::uint64_t> fanout_load;
  // Bucket brigade: every trit back in Wait after the reset.
  bool reset_complete = true;
};

/// Directional switch-level netlist: a transistor passes a high level from
/// its source net to its drain net while its gate net is high.
class SwitchNetlist {
 public:
  using Net = std::uint32_t;
  struct Transistor {
    Net gate;
    Net source;
    Net drain;
  };

  Net add_net();
  std::uint64_t add_transistor(Net gate, Net source, Net drain);
  void drive(Net net, bool level);

  /// Propagates levels to a fixed point.
  void settle();

  bool level(Net net) const { return levels_.at(net); }
  bool gate_on(std::uint64_t t) const { return levels_[transistors_.at(t).gate]; }
  bool conducting(std::uint64_t t) const;
  std::size_t transistor_count() const { return transistors_.size(); }
  const Transistor& transistor(std::uint64_t t) const { return transistors_.at(t); }

 private:
  std::vector<bool> levels_;
  std::vector<bool> driven_;
  std::vector<Transistor> transistors_;
};

/// Three-state node element of the classical bucket brigade.
class TritNode {
 public:
  Trit state() const { return state_; }
  /// Wait -> Zero/One on signal arrival; throws if already set.
  void receive(int bit);
  /// Direction for a passing signal; throws while waiting.
  int route() const;
  void reset() { state_ = Trit::Wait; }

 private:
  Trit state_ = Trit::Wait;
};

/// Binary tree of TritNodes with sequential bit loading.
class BucketBrigadeTree {
 public:
  explicit BucketBrigadeTree(int n);

  /// Routes a bit through set trits and stores it in the first waiting one.
  /// Returns the node that stored it.
  NodeId send_bit(int bit);
  /// Leaf reached by a signal following the set trits.
  Address probe() const;
  void reset();

  std::uint64_t active_count() const;
  std::uint64_t waiting_count() const;
  const std::vector<TritNode>& nodes() const { return nodes_; }
  const TreeTopology& topology() const { return tree_; }

 private:
  TreeTopology tree_;
  std::vector<TritNode> nodes_;
};

/// Dual-rail fanout decoder: every node holds two transistors whose gates
/// hang on the rails of its level's index bit.
ActivationTrace simulate_fanout_classical(int n, Address k);

/// Pass-transistor decoder in which only the node on the selected route has
/// its transistors enabled, plus one access transistor per memory cell.
ActivationTrace simulate_modified_fanout(int n, Address k);

/// Sequential trit loading, probe, and reset.
ActivationTrace simulate_bucket_classical(int n, Address k);

struct ElementCounts2d {
  std::uint64_t elements_1d = 0;
  std::uint64_t elements_2d = 0;
};

/// Switching elements for a linear array versus a square array addressed by
/// a row tree and a column tree. Odd n gives the row tree the extra bit.
ElementCounts2d elements_2d(int n);

}  // namespace qram
