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

#include "qram/bucket.hpp"

#include <algorithm>
#include <string>

#include "bus_gates.hpp"
#include "qram/errors.hpp"

namespace qram {

namespace {

using Touched = ProtocolRunner::Touched;

// The carrier at a level-l node moves to the child its active trit selects,
// and a carrier sitting at that child moves back up. Waiting trits do not
// route.
void hop(ProtocolRunner& runner, const TreeTopology& tree, int level, int carrier,
         GateKind kind, int pass = -1) {
  GateEvent ev{kind, level, pass, carrier, "trit", {}};
  runner.gate(std::move(ev), [&tree, level](Configuration& c, Touched& t) {
    if (!c.bus) return Amplitude{1.0};
    Bus& bus = *c.bus;
    const Location p = bus.position;
    if (p.is_node() && tree.level(p.id) == level) {
      const Trit s = c.qutrits[p.id];
      if (trit_active(s)) {
        bus.position = tree.child(p.id, trit_bit(s));
        t.insert(p);
      }
    } else if ((p.is_node() && p.id != 0 && tree.level(p.id) == level + 1) ||
               (p.is_leaf() && level == tree.depth() - 1)) {
      const NodeId v = tree.parent(p);
      const Trit s = c.qutrits[v];
      if (trit_active(s) && tree.child(v, trit_bit(s)) == p) {
        bus.position = Location::node(v);
        t.insert(Location::node(v));
      }
    }
    return Amplitude{1.0};
  });
}

void store(ProtocolRunner& runner, const TreeTopology& tree, int level, int carrier) {
  GateEvent ev{GateKind::Store, level, -1, carrier, "trit", {}};
  runner.gate(std::move(ev), [&tree, level](Configuration& c, Touched& t) {
    if (!c.bus || !c.bus->position.is_node()) return Amplitude{1.0};
    const NodeId v = c.bus->position.id;
    if (tree.level(v) != level || c.qutrits[v] != Trit::Wait) return Amplitude{1.0};
    c.qutrits[v] = trit_from_bit(c.bus->payload);
    c.bus.reset();
    t.insert(Location::node(v));
    return Amplitude{1.0};
  });
}

void unstore(ProtocolRunner& runner, const TreeTopology& tree, int level) {
  GateEvent ev{GateKind::Unstore, level, -1, level, "trit", {}};
  runner.gate(std::move(ev), [&tree, level](Configuration& c, Touched& t) {
    release_vacuum_bus(c);
    if (c.bus) return Amplitude{1.0};
    const auto v = active_path_node(c, tree, level);
    if (!v || !trit_active(c.qutrits[*v])) return Amplitude{1.0};
    c.bus = Bus{Location::node(*v), static_cast<std::uint8_t>(trit_bit(c.qutrits[*v])),
                Heading::Up};
    c.qutrits[*v] = Trit::Wait;
    t.insert(Location::node(*v));
    return Amplitude{1.0};
  });
}

// Index qubit i <-> carrier payload at the entrance.
void index_swap(ProtocolRunner& runner, int n, int i, GateKind kind) {
  GateEvent ev{kind, -1, -1, i, "Q" + std::to_string(i), {Location::root_edge()}};
  runner.gate(std::move(ev), [n, i, kind](Configuration& c, Touched&) {
    Bus& bus = materialize_bus(c);
    if (bus.position.kind != Location::Kind::RootEdge) return Amplitude{1.0};
    const int q = index_bit(c.index, n, i);
    c.index = with_index_bit(c.index, n, i, bus.payload);
    bus.payload = static_cast<std::uint8_t>(q);
    bus.direction = kind == GateKind::IndexInject ? Heading::Down : Heading::Up;
    release_vacuum_bus(c);
    return Amplitude{1.0};
  });
}

void load_qubit(ProtocolRunner& runner, const TreeTopology& tree, int i) {
  index_swap(runner, tree.depth(), i, GateKind::IndexInject);
  detail::bus_enter(runner, i);
  for (int l = 0; l < i; ++l) hop(runner, tree, l, i, GateKind::Hop);
  store(runner, tree, i, i);
}

void unload_qubit(ProtocolRunner& runner, const TreeTopology& tree, int i) {
  unstore(runner, tree, i);
  for (int l = i - 1; l >= 0; --l) hop(runner, tree, l, i, GateKind::HopUp);
  detail::bus_exit(runner, i);
  index_swap(runner, tree.depth(), i, GateKind::IndexEject);
}

void load_all(ProtocolRunner& runner, const TreeTopology& tree) {
  for (int i = 0; i < tree.depth(); ++i) load_qubit(runner, tree, i);
}

void unload_all(ProtocolRunner& runner, const TreeTopology& tree) {
  for (int i = tree.depth() - 1; i >= 0; --i) unload_qubit(runner, tree, i);
}

void require_loadable(const QuantumState& state) {
  for (const auto& [c, amp] : state.amplitudes()) {
    if (c.bus) throw ProtocolError("load_index input must not contain a bus");
    if (std::any_of(c.qutrits.begin(), c.qutrits.end(), trit_active)) {
      throw ProtocolError("load_index needs every trit in Wait");
    }
  }
}

// Exactly n active trits on one root-to-leaf route, no carrier, Q cleared.
void require_loaded(const QuantumState& state) {
  const TreeTopology tree(state.n());
  const int n = state.n();
  for (const auto& [c, amp] : state.amplitudes()) {
    if (c.bus) throw ProtocolError("unload_index input must not contain a carrier");
    if (c.index != 0) throw ProtocolError("unload_index needs the index register cleared");
    const auto active = std::count_if(c.qutrits.begin(), c.qutrits.end(), trit_active);
    const auto last = active_path_node(c, tree, n - 1);
    if (!last || !trit_active(c.qutrits[*last])) {
      throw ProtocolError("invalid trit pattern: active trits do not reach the last level");
    }
    if (active != n) {
      throw ProtocolError("invalid trit pattern: " + std::to_string(active) +
                          " active trits, expected " + std::to_string(n) +
                          " on a single route (orphan active trit)");
    }
  }
}

}  // namespace

std::optional<NodeId> active_path_node(const Configuration& c, const TreeTopology& tree,
                                       int level) {
  if (level < 0 || level >= tree.depth()) return std::nullopt;
  NodeId v = 0;
  for (int l = 0; l < level; ++l) {
    const Trit s = c.qutrits[v];
    if (!trit_active(s)) return std::nullopt;
    v = tree.child(v, trit_bit(s)).id;
  }
  return v;
}

QuantumState load_index(const QuantumState& state) {
  require_loadable(state);
  const TreeTopology tree(state.n());
  ProtocolRunner runner(state);
  load_all(runner, tree);
  return std::move(runner).take_state();
}

QuantumState unload_index(const QuantumState& state) {
  require_loaded(state);
  const TreeTopology tree(state.n());
  ProtocolRunner runner(state);
  unload_all(runner, tree);
  return std::move(runner).take_state();
}

BucketCallReport bb_call(const QuantumState& state, const MemoryArray& memory, AccessMode mode,
                         const FaultHook& hook) {
  detail::require_call_input(state, memory, mode);
  const TreeTopology tree(state.n());
  const int n = state.n();

  ProtocolRunner runner(state, hook);
  load_all(runner, tree);

  int active_per_branch = -1;
  for (const auto& [c, amp] : runner.state().amplitudes()) {
    const int active =
        static_cast<int>(std::count_if(c.qutrits.begin(), c.qutrits.end(), trit_active));
    if (active_per_branch >= 0 && active != active_per_branch && !hook) {
      throw ProtocolError("branches disagree on the number of active switches");
    }
    active_per_branch = std::max(active_per_branch, active);
  }

  for (int pass = 0; pass < state.d(); ++pass) {
    detail::bus_inject(runner, pass);
    detail::bus_enter(runner, -1);
    for (int l = 0; l < n; ++l) hop(runner, tree, l, -1, GateKind::Hop, pass);
    detail::memory_interaction(runner, memory, mode, n, pass);
    detail::output_swap(runner, n, pass);
    for (int l = n - 1; l >= 0; --l) hop(runner, tree, l, -1, GateKind::HopUp, pass);
    detail::bus_exit(runner, -1);
  }
  unload_all(runner, tree);
  runner.settle();

  BucketCallReport report{runner.state(), active_per_branch, {}, 0, {}};
  report.gate_events = std::move(runner).take_events();
  report.time_steps = count_tree_steps(report.gate_events);
  report.steps_per_level.assign(n + 1, 0);
  for (const auto& ev : report.gate_events) {
    if (is_tree_step(ev.kind) && ev.level >= 0) ++report.steps_per_level[ev.level];
  }
  return report;
}

std::uint64_t bb_step_count(int n) {
  if (n < 1) throw ShapeError("bb_step_count needs n >= 1");
  const auto m = static_cast<std::uint64_t>(n);
  return m * (m + 1) + 2 * m + 1;
}

}  // namespace qram
