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
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qram/state.hpp"

namespace qram {

/// Gate kinds appearing in protocol event logs.
enum class GateKind : std::uint8_t {
  BusInject,    // output bit moved into a fresh bus payload at the entrance
  IndexInject,  // index qubit leaves Q as a flying carrier
  Enter,        // carrier crosses from the entrance to the root node
  Route,        // fanout: controlled routing gate at one node
  Unroute,      // fanout: the same gate run backwards during uncomputation
  Hop,          // bucket: carrier moves one level down through an active trit
  HopUp,        // bucket: carrier moves one level up through an active trit
  Store,        // bucket: carrier swapped into a waiting trit
  Unstore,      // bucket: active trit swapped back out into a carrier
  MemoryCopy,   // C-NOT from the addressed cell bit onto the bus payload
  MemorySwap,   // swap of the bus payload with the addressed cell bit
  OutputSwap,   // bus payload swapped into the output register
  Exit,         // carrier crosses from the root node back to the entrance
  IndexEject,   // returning carrier written back into Q
};

std::string_view gate_kind_name(GateKind k);

/// Counts toward the time-step total: routing hops, storage, and the memory
/// interaction. Entrance crossings and register hand-offs do not.
bool is_tree_step(GateKind k);

/// Interactions that set or use a switching element and can therefore
/// misroute. The fanout uncomputation reuses switches already latched by the
/// forward Route gates, so Unroute is not a separate switching event.
bool is_switching_event(GateKind k);

/// One logged two-body event.
struct GateEvent {
  GateKind kind = GateKind::Route;
  int level = -1;    // tree level; n for leaf interactions, -1 at the entrance
  int pass = -1;     // bit position of the cell being transferred, -1 otherwise
  int carrier = -1;  // index qubit in flight, -1 when the bus is the carrier
  std::string control;            // "Q<j>", "trit", "cell", ...
  std::vector<Location> targets;  // locations acted on, over the whole support
};

/// Returns a basis map to apply just before the event, or nothing.
using FaultHook = std::function<std::optional<BasisMap>(const GateEvent&)>;

/// Executes gates on a state and keeps the event log.
///
/// Each gate is a basis map; the runner records which locations it touched,
/// applies any fault the hook injects, and enforces that the support size is
/// unchanged (every protocol gate permutes the computational basis).
class ProtocolRunner {
 public:
  using Touched = std::set<Location>;
  using Gate = std::function<Amplitude(Configuration&, Touched&)>;

  explicit ProtocolRunner(QuantumState state, FaultHook hook = {});

  /// Applies one gate logged as `event`.
  void gate(GateEvent event, const Gate& fn);
  /// Applies a set of commuting gates in a single pass, logging each event.
  /// Faults for all events are applied before the pass.
  void gate_group(std::vector<GateEvent> events, const Gate& fn);

  /// Drops empty buses parked at the entrance (the carrier leaves the device).
  void settle();

  const QuantumState& state() const { return state_; }
  const std::vector<GateEvent>& events() const { return events_; }
  QuantumState take_state() && { return std::move(state_); }
  std::vector<GateEvent> take_events() && { return std::move(events_); }

 private:
  void run(const Gate& fn, Touched& touched);

  QuantumState state_;
  FaultHook hook_;
  std::vector<GateEvent> events_;
};

/// Carrier helpers. An absent bus is the same physical state as an empty bus
/// parked at the entrance with payload 0.
Bus& materialize_bus(Configuration& c);
void release_vacuum_bus(Configuration& c);

int count_tree_steps(const std::vector<GateEvent>& events);

}  // namespace qram
