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

#include "bus_gates.hpp"

#include <algorithm>
#include <utility>

#include "qram/errors.hpp"

namespace qram::detail {

namespace {

std::uint8_t swap_bit(std::uint32_t& word, int bit, std::uint8_t value) {
  const auto old = static_cast<std::uint8_t>((word >> bit) & 1U);
  word = (word & ~(std::uint32_t{1} << bit)) | (std::uint32_t{value} << bit);
  return old;
}

}  // namespace

void bus_inject(ProtocolRunner& runner, int pass) {
  GateEvent ev{GateKind::BusInject, -1, pass, -1, "A" + std::to_string(pass), {}};
  runner.gate(std::move(ev), [pass](Configuration& c, ProtocolRunner::Touched& t) {
    Bus& bus = materialize_bus(c);
    if (bus.position.kind == Location::Kind::RootEdge) {
      bus.payload = swap_bit(c.output, pass, bus.payload);
      bus.direction = Heading::Down;
      t.insert(Location::root_edge());
    }
    return Amplitude{1.0};
  });
}

void bus_enter(ProtocolRunner& runner, int carrier) {
  GateEvent ev{GateKind::Enter, -1, -1, carrier, "", {}};
  runner.gate(std::move(ev), [](Configuration& c, ProtocolRunner::Touched& t) {
    Bus& bus = materialize_bus(c);
    if (bus.position.kind == Location::Kind::RootEdge) {
      bus.position = Location::node(0);
      t.insert(Location::node(0));
    } else if (bus.position == Location::node(0)) {
      bus.position = Location::root_edge();
      t.insert(Location::node(0));
    }
    return Amplitude{1.0};
  });
}

void bus_exit(ProtocolRunner& runner, int carrier) {
  GateEvent ev{GateKind::Exit, -1, -1, carrier, "", {}};
  runner.gate(std::move(ev), [](Configuration& c, ProtocolRunner::Touched& t) {
    if (!c.bus) return Amplitude{1.0};
    Bus& bus = *c.bus;
    if (bus.position == Location::node(0)) {
      bus.position = Location::root_edge();
      t.insert(Location::node(0));
    } else if (bus.position.kind == Location::Kind::RootEdge) {
      bus.position = Location::node(0);
      t.insert(Location::node(0));
    }
    return Amplitude{1.0};
  });
}

void memory_interaction(ProtocolRunner& runner, const MemoryArray& memory, AccessMode mode,
                        int n, int pass) {
  const bool quantum = memory.mode() == MemoryMode::Quantum;
  GateEvent ev{mode == AccessMode::Copy ? GateKind::MemoryCopy : GateKind::MemorySwap,
               n,
               pass,
               -1,
               "cell",
               {}};
  runner.gate(std::move(ev), [&, quantum](Configuration& c, ProtocolRunner::Touched& t) {
    if (!c.bus || !c.bus->position.is_leaf()) return Amplitude{1.0};
    Bus& bus = *c.bus;
    const Address k = bus.position.id;
    t.insert(bus.position);
    if (mode == AccessMode::Swap) {
      bus.payload = swap_bit(c.memory[k], pass, bus.payload);
    } else {
      const std::uint32_t cell = quantum ? c.memory[k] : memory.cell(k);
      bus.payload ^= static_cast<std::uint8_t>((cell >> pass) & 1U);
    }
    return Amplitude{1.0};
  });
}

void output_swap(ProtocolRunner& runner, int n, int pass) {
  GateEvent ev{GateKind::OutputSwap, n, pass, -1, "A" + std::to_string(pass), {}};
  runner.gate(std::move(ev), [pass](Configuration& c, ProtocolRunner::Touched& t) {
    Bus& bus = materialize_bus(c);
    bus.payload = swap_bit(c.output, pass, bus.payload);
    bus.direction = Heading::Up;
    t.insert(bus.position);
    return Amplitude{1.0};
  });
}

void require_call_input(const QuantumState& state, const MemoryArray& memory, AccessMode mode) {
  memory.check_compatible(state.shape());
  if (mode == AccessMode::Swap && memory.mode() != MemoryMode::Quantum) {
    throw ShapeError("swap access requires memory held inside the state (quantum memory)");
  }
  for (const auto& [c, amp] : state.amplitudes()) {
    if (c.bus) throw ProtocolError("memory call input must not contain a bus");
    if (std::any_of(c.qutrits.begin(), c.qutrits.end(), trit_active)) {
      throw ProtocolError("memory call input must have every trit in Wait");
    }
  }
}

}  // namespace qram::detail
