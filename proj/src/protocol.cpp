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

#include "qram/protocol.hpp"

#include <algorithm>

#include "qram/errors.hpp"

namespace qram {

std::string_view gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::BusInject:
      return "bus_inject";
    case GateKind::IndexInject:
      return "index_inject";
    case GateKind::Enter:
      return "enter";
    case GateKind::Route:
      return "route";
    case GateKind::Unroute:
      return "unroute";
    case GateKind::Hop:
      return "hop";
    case GateKind::HopUp:
      return "hop_up";
    case GateKind::Store:
      return "store";
    case GateKind::Unstore:
      return "unstore";
    case GateKind::MemoryCopy:
      return "memory_copy";
    case GateKind::MemorySwap:
      return "memory_swap";
    case GateKind::OutputSwap:
      return "output_swap";
    case GateKind::Exit:
      return "exit";
    case GateKind::IndexEject:
      return "index_eject";
  }
  return "unknown";
}

bool is_tree_step(GateKind k) {
  switch (k) {
    case GateKind::Route:
    case GateKind::Unroute:
    case GateKind::Hop:
    case GateKind::HopUp:
    case GateKind::Store:
    case GateKind::Unstore:
    case GateKind::MemoryCopy:
    case GateKind::MemorySwap:
      return true;
    default:
      return false;
  }
}

bool is_switching_event(GateKind k) {
  switch (k) {
    case GateKind::Route:
    case GateKind::Hop:
    case GateKind::HopUp:
    case GateKind::Store:
    case GateKind::Unstore:
      return true;
    default:
      return false;
  }
}

ProtocolRunner::ProtocolRunner(QuantumState state, FaultHook hook)
    : state_(std::move(state)), hook_(std::move(hook)) {}

void ProtocolRunner::gate(GateEvent event, const Gate& fn) {
  std::vector<GateEvent> one;
  one.push_back(std::move(event));
  gate_group(std::move(one), fn);
}

void ProtocolRunner::gate_group(std::vector<GateEvent> events, const Gate& fn) {
  if (hook_) {
    for (const auto& ev : events) {
      if (auto fault = hook_(ev)) {
        const std::size_t before = state_.support_size();
        state_ = state_.apply(*fault);
        if (state_.support_size() != before) throw ProtocolError("fault changed support size");
      }
    }
  }
  Touched touched;
  run(fn, touched);
  for (auto& ev : events) {
    if (ev.targets.empty()) ev.targets.assign(touched.begin(), touched.end());
    events_.push_back(std::move(ev));
  }
}

void ProtocolRunner::run(const Gate& fn, Touched& touched) {
  const std::size_t before = state_.support_size();
  state_ = state_.apply([&](Configuration& c) { return fn(c, touched); });
  if (state_.support_size() != before) {
    throw ProtocolError("gate changed the support size of a permutation-only protocol");
  }
}

void ProtocolRunner::settle() {
  state_ = state_.apply([](Configuration& c) {
    release_vacuum_bus(c);
    return Amplitude{1.0};
  });
}

Bus& materialize_bus(Configuration& c) {
  if (!c.bus) c.bus = Bus{Location::root_edge(), 0, Heading::Down};
  return *c.bus;
}

void release_vacuum_bus(Configuration& c) {
  if (c.bus && c.bus->position.kind == Location::Kind::RootEdge && c.bus->payload == 0) {
    c.bus.reset();
  }
}

int count_tree_steps(const std::vector<GateEvent>& events) {
  return static_cast<int>(std::count_if(events.begin(), events.end(),
                                        [](const GateEvent& e) { return is_tree_step(e.kind); }));
}

}  // namespace qram
