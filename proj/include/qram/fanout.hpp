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
#include <vector>

#include "qram/memory.hpp"
#include "qram/protocol.hpp"
#include "qram/state.hpp"

namespace qram {

struct FanoutCallReport {
  QuantumState final_state;
  std::vector<GateEvent> gate_events;
  // Routing gates met by one branch per pass; each is driven by a different
  // index qubit, so this is also the number of index-bus interactions.
  int index_bus_interactions = 0;
  int routing_nodes_traversed_per_branch = 0;
  int passes = 0;
};

/// Moves a bus parked at the entrance to the leaf named by the index register
/// of each term. Index qubit j drives the routing gate of every node on level
/// j; the trits are not used by this architecture.
QuantumState binary_to_unary(const QuantumState& state);

/// Inverse of binary_to_unary: the bus at leaf k is routed back to the entrance.
QuantumState unary_to_binary(const QuantumState& state);

/// Full fanout memory call. For each of the d cell bits the bus takes the
/// output bit, descends, interacts with the cell (C-NOT for copy, swap for
/// swap), hands its payload to the output register at the leaf, and is
/// routed back. With classical memory and copy access the result is
/// sum_k a_k |k>|a xor f_k>.
FanoutCallReport fanout_call(const QuantumState& state, const MemoryArray& memory,
                             AccessMode mode, const FaultHook& hook = {});

struct FanoutGateCounts {
  std::uint64_t total_routing_gates = 0;
  std::vector<std::uint64_t> controls_of_index_bit;
  int bus_interactions = 0;
};

/// Routing gates driven by each index qubit, counted from the tree layout.
FanoutGateCounts fanout_gate_counts(int n);

}  // namespace qram
