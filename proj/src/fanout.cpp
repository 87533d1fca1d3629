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

#include "qram/fanout.hpp"

#include <algorithm>
#include <set>

#include "bus_gates.hpp"
#include "qram/errors.hpp"

namespace qram {

namespace {

// Controlled routing at every node of one level. Index qubit j selects the
// child; a node element left out of Wait by a fault inverts the switch. The
// gate swaps "bus at v" with "bus at the selected child", so the same gate
// run again routes the bus back up.
void route_level(ProtocolRunner& runner, const TreeTopology& tree, int level, int pass,
                 GateKind kind) {
  std::vector<GateEvent> events;
  const NodeId first = TreeTopology::level_start(level);
  const std::uint64_t width = TreeTopology::level_width(level);
  events.reserve(width);
  const std::string control = "Q" + std::to_string(level);
  for (NodeId v = first; v < first + width; ++v) {
    events.push_back(GateEvent{kind, level, pass, -1, control, {Location::node(v)}});
  }
  const int n = tree.depth();
  runner.gate_group(std::move(events), [&tree, level, n](Configuration& c,
                                                         ProtocolRunner::Touched&) {
    if (!c.bus) return Amplitude{1.0};
    Bus& bus = *c.bus;
    auto selected_child = [&](NodeId v) {
      const int dir = index_bit(c.index, n, level) ^ (c.qutrits[v] == Trit::One ? 1 : 0);
      return tree.child(v, dir);
    };
    const Location p = bus.position;
    if (p.is_node() && tree.level(p.id) == level) {
      bus.position = selected_child(p.id);
    } else if ((p.is_node() && p.id != 0 && tree.level(p.id) == level + 1) ||
               (p.is_leaf() && level == n - 1)) {
      const NodeId v = tree.parent(p);
      if (selected_child(v) == p) bus.position = Location::node(v);
    }
    return Amplitude{1.0};
  });
}

void descend(ProtocolRunner& runner, const TreeTopology& tree, int pass) {
  for (int j = 0; j < tree.depth(); ++j) route_level(runner, tree, j, pass, GateKind::Route);
}

void ascend(ProtocolRunner& runner, const TreeTopology& tree, int pass) {
  for (int j = tree.depth() - 1; j >= 0; --j) {
    route_level(runner, tree, j, pass, GateKind::Unroute);
  }
}

}  // namespace

QuantumState binary_to_unary(const QuantumState& state) {
  for (const auto& [c, amp] : state.amplitudes()) {
    if (!c.bus) throw ProtocolError("binary_to_unary needs a bus at the tree entrance");
    if (c.bus->position.kind != Location::Kind::RootEdge) {
      throw ProtocolError("binary_to_unary needs the bus at the tree entrance, found " +
                          c.bus->position.str());
    }
  }
  const TreeTopology tree(state.n());
  ProtocolRunner runner(state);
  detail::bus_enter(runner, -1);
  descend(runner, tree, 0);
  return std::move(runner).take_state();
}

QuantumState unary_to_binary(const QuantumState& state) {
  for (const auto& [c, amp] : state.amplitudes()) {
    if (!c.bus || !c.bus->position.is_leaf()) {
      throw ProtocolError("unary_to_binary needs the bus at a leaf");
    }
  }
  const TreeTopology tree(state.n());
  ProtocolRunner runner(state);
  ascend(runner, tree, 0);
  detail::bus_exit(runner, -1);
  return std::move(runner).take_state();
}

FanoutCallReport fanout_call(const QuantumState& state, const MemoryArray& memory,
                             AccessMode mode, const FaultHook& hook) {
  detail::require_call_input(state, memory, mode);
  const TreeTopology tree(state.n());
  const int n = state.n();

  std::set<Address> addresses;
  for (const auto& [c, amp] : state.amplitudes()) addresses.insert(c.index);

  ProtocolRunner runner(state, hook);
  for (int pass = 0; pass < state.d(); ++pass) {
    detail::bus_inject(runner, pass);
    detail::bus_enter(runner, -1);
    descend(runner, tree, pass);
    detail::memory_interaction(runner, memory, mode, n, pass);
    detail::output_swap(runner, n, pass);
    ascend(runner, tree, pass);
    detail::bus_exit(runner, -1);
  }
  runner.settle();

  FanoutCallReport report{runner.state(), {}, 0, 0, state.d()};
  report.gate_events = std::move(runner).take_events();

  // Per-branch interaction counts, read back from the log for the first pass.
  bool first = true;
  for (Address k : addresses) {
    const Path path = tree.path(k);
    const std::set<NodeId> on_path(path.nodes.begin(), path.nodes.end());
    int routed = 0;
    std::set<std::string> controls;
    for (const auto& ev : report.gate_events) {
      if (ev.kind != GateKind::Route || ev.pass != 0) continue;
      if (on_path.count(ev.targets.front().id)) {
        ++routed;
        controls.insert(ev.control);
      }
    }
    const int interactions = static_cast<int>(controls.size());
    if (!first && (routed != report.routing_nodes_traversed_per_branch ||
                   interactions != report.index_bus_interactions)) {
      throw ProtocolError("branches disagree on routing counts");
    }
    report.routing_nodes_traversed_per_branch = routed;
    report.index_bus_interactions = interactions;
    first = false;
  }
  return report;
}

FanoutGateCounts fanout_gate_counts(int n) {
  const TreeTopology tree(n);
  FanoutGateCounts counts;
  counts.controls_of_index_bit.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    counts.controls_of_index_bit[j] = TreeTopology::level_width(j);
    counts.total_routing_gates += TreeTopology::level_width(j);
  }
  counts.bus_interactions = static_cast<int>(tree.path(0).nodes.size());
  return counts;
}

}  // namespace qram
