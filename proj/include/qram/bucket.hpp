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
#include <optional>
#include <vector>

#include "qram/memory.hpp"
#include "qram/protocol.hpp"
#include "qram/state.hpp"

namespace qram {

struct BucketCallReport {
  QuantumState final_state;
  int active_switches_per_branch = 0;
  std::vector<GateEvent> gate_events;
  int time_steps = 0;
  // Tree steps taken at each level; entry n counts the leaf interactions.
  std::vector<int> steps_per_level;
};

/// Sends the index qubits into the tree one at a time. Qubit j hops through
/// the j switches already set above it and is swapped into the waiting trit
/// it reaches at level j. The index register is left at 0.
QuantumState load_index(const QuantumState& state);

/// Inverse of load_index, last level first. Rejects configurations whose
/// active trits do not form one root-to-leaf route.
QuantumState unload_index(const QuantumState& state);

/// Full bucket-brigade memory call: load, then for each cell bit a bus round
/// trip (descent, cell interaction, hand-off to the output register, ascent),
/// then unload.
BucketCallReport bb_call(const QuantumState& state, const MemoryArray& memory, AccessMode mode,
                         const FaultHook& hook = {});

/// Tree steps of a single-bit call: n(n+1) for loading and unloading, 2n for
/// the bus round trip and 1 for the cell interaction.
std::uint64_t bb_step_count(int n);

/// Node at `level` reached from the root by following active trits, if the
/// walk does not hit a waiting trit first.
std::optional<NodeId> active_path_node(const Configuration& c, const TreeTopology& tree,
                                       int level);

}  // namespace qram
