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

#include <gtest/gtest.h>

#include <set>

#include "qram/errors.hpp"
#include "qram/oracle.hpp"
#include "test_util.hpp"

using namespace qram;
using namespace qram::testing;

namespace {

QuantumState with_bus_at_root(const QuantumState& s) {
  return s.apply([](Configuration& c) {
    c.bus = Bus{Location::root_edge(), 0, Heading::Down};
    return Amplitude(1.0);
  });
}

Location bus_position(const QuantumState& s, Address k) {
  for (const auto& [c, amp] : s.amplitudes()) {
    if (c.index == k) return c.bus.value().position;
  }
  ADD_FAILURE() << "address " << k << " not in support";
  return Location::root_edge();
}

}  // namespace

TEST(binary_to_unary, basis_address_reaches_its_leaf) {
  const QuantumState out = binary_to_unary(with_bus_at_root(basis_state(2, 2)));
  EXPECT_EQ(bus_position(out, 2), Location::leaf(2));
}

TEST(binary_to_unary, superposition_entangles_bus_with_index) {
  const double h = 1.0 / std::sqrt(2.0);
  const QuantumState out = binary_to_unary(with_bus_at_root(make_address_state(2, {{0, h}, {3, h}})));
  EXPECT_EQ(bus_position(out, 0), Location::leaf(0));
  EXPECT_EQ(bus_position(out, 3), Location::leaf(3));
  EXPECT_EQ(schmidt_rank(out, {Register::Index}), 2);
  for (const auto& [c, amp] : out.amplitudes()) {
    for (Trit t : c.qutrits) EXPECT_EQ(t, Trit::Wait);
  }
}

TEST(binary_to_unary, all_addresses_distinct_leaves) {
  std::set<Location> leaves;
  for (Address k = 0; k < 8; ++k) {
    const QuantumState out = binary_to_unary(with_bus_at_root(basis_state(3, k)));
    const Location at = bus_position(out, k);
    EXPECT_EQ(at, Location::leaf(k));
    leaves.insert(at);
  }
  EXPECT_EQ(leaves.size(), 8U);
}

TEST(binary_to_unary, rejects_missing_or_misplaced_bus) {
  EXPECT_THROW(binary_to_unary(basis_state(2, 0)), ProtocolError);
  const QuantumState at_node = basis_state(2, 0).apply([](Configuration& c) {
    c.bus = Bus{Location::node(1), 0, Heading::Down};
    return Amplitude(1.0);
  });
  EXPECT_THROW(binary_to_unary(at_node), ProtocolError);
  EXPECT_THROW(unary_to_binary(basis_state(2, 0)), ProtocolError);
}

TEST(binary_to_unary, round_trip_is_identity) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 5;
    const QuantumState in = with_bus_at_root(random_address_state(n, 1 + trial % 6, rng));
    const QuantumState back = unary_to_binary(binary_to_unary(in));
    ASSERT_LT(max_amplitude_diff(back, in), 1e-12);
  }
}

TEST(fanout_call, copy_example) {
  const double h = 1.0 / std::sqrt(2.0);
  const QuantumState in = make_address_state(2, {{0, h}, {1, h}});
  const auto r = fanout_call(in, MemoryArray(2, 1, {0, 1, 1, 0}), AccessMode::Copy);
  QuantumState::Map expected;
  Configuration c0 = in.blank_configuration();
  Configuration c1 = c0;
  c1.index = 1;
  c1.output = 1;
  expected.emplace(c0, h);
  expected.emplace(c1, h);
  EXPECT_LT(max_amplitude_diff(r.final_state, QuantumState(in.shape(), expected)), 1e-15);
}

TEST(fanout_call, zero_memory_leaves_input) {
  std::mt19937_64 rng(2);
  for (int n = 1; n <= 4; ++n) {
    const QuantumState in = random_address_state(n, 3, rng);
    const auto r = fanout_call(in, MemoryArray::zeros(n), AccessMode::Copy);
    EXPECT_NEAR(fidelity(r.final_state, in), 1.0, 1e-12);
  }
}

TEST(fanout_call, matches_oracle_on_random_superpositions) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const int d = 1 + trial % 2;
    const QuantumState in = random_address_state(n, 4, rng, d);
    const MemoryArray mem = MemoryArray::random(n, d, trial);
    const auto r = fanout_call(in, mem, AccessMode::Copy);
    ASSERT_LT(max_amplitude_diff(r.final_state, ideal_qram_oracle(in, mem, AccessMode::Copy)),
              1e-12);
  }
}

TEST(fanout_call, returns_bus_and_reports_counts) {
  std::mt19937_64 rng(8);
  for (int n = 1; n <= 4; ++n) {
    const QuantumState in = random_address_state(n, 3, rng);
    const auto r = fanout_call(in, MemoryArray::random(n, 1, n), AccessMode::Copy);
    EXPECT_EQ(r.index_bus_interactions, n);
    EXPECT_EQ(r.routing_nodes_traversed_per_branch, n);
    for (const auto& [c, amp] : r.final_state.amplitudes()) {
      EXPECT_FALSE(c.bus.has_value());
      for (Trit t : c.qutrits) EXPECT_EQ(t, Trit::Wait);
    }
  }
}

TEST(fanout_call, one_route_event_per_level_on_each_path) {
  const int n = 3;
  const auto r = fanout_call(basis_state(n, 5), MemoryArray::zeros(n), AccessMode::Copy);
  const Path p = path_for_address(n, 5);
  for (int j = 0; j < n; ++j) {
    int hits = 0;
    for (const auto& ev : r.gate_events) {
      if (ev.kind == GateKind::Route && ev.level == j && ev.targets.front().id == p.nodes[j]) {
        ++hits;
      }
    }
    EXPECT_EQ(hits, 1) << "level " << j;
  }
}

TEST(fanout_call, index_rank_counts_distinct_outputs) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    const QuantumState in = random_address_state(n, 4, rng);
    const MemoryArray mem = MemoryArray::random(n, 1, 500 + trial);
    const auto r = fanout_call(in, mem, AccessMode::Copy);
    std::set<std::uint32_t> outputs;
    for (const auto& [c, amp] : r.final_state.amplitudes()) outputs.insert(c.output);
    EXPECT_EQ(schmidt_rank(r.final_state, {Register::Index}),
              static_cast<int>(outputs.size()));
  }
}

TEST(fanout_call, basis_linearity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const auto terms = random_superposition(n, 2 + trial % 2, rng);
    const MemoryArray mem = MemoryArray::random(n, 1, trial);
    const QuantumState whole =
        fanout_call(make_address_state(n, terms), mem, AccessMode::Copy).final_state;
    for (const auto& [k, amp] : terms) {
      const QuantumState part = fanout_call(basis_state(n, k), mem, AccessMode::Copy).final_state;
      const auto& [c, one] = *part.amplitudes().begin();
      ASSERT_LT(std::abs(whole.amplitude(c) - amp * one), 1e-12);
    }
  }
}

TEST(fanout_call, rejects_bad_inputs) {
  EXPECT_THROW(fanout_call(basis_state(2, 0), MemoryArray::zeros(3), AccessMode::Copy),
               ShapeError);
  EXPECT_THROW(fanout_call(basis_state(2, 0), MemoryArray::zeros(2), AccessMode::Swap),
               ShapeError);
}

TEST(fanout_call, swap_moves_cell_into_output) {
  const QuantumState in = attach_quantum_memory(basis_state(2, 2), {{{0, 0, 1, 0}, 1.0}});
  const auto r = fanout_call(in, MemoryArray::quantum(2), AccessMode::Swap);
  const auto& c = r.final_state.amplitudes().begin()->first;
  EXPECT_EQ(c.output, 1U);
  EXPECT_EQ(c.memory, std::vector<std::uint32_t>({0, 0, 0, 0}));
}

TEST(fanout_gate_counts, geometric_controls) {
  const auto c3 = fanout_gate_counts(3);
  EXPECT_EQ(c3.controls_of_index_bit, std::vector<std::uint64_t>({1, 2, 4}));
  EXPECT_EQ(c3.total_routing_gates, 7U);
  EXPECT_EQ(c3.bus_interactions, 3);
  const auto c1 = fanout_gate_counts(1);
  EXPECT_EQ(c1.controls_of_index_bit, std::vector<std::uint64_t>({1}));
  EXPECT_EQ(c1.total_routing_gates, 1U);
  const auto c8 = fanout_gate_counts(8);
  std::uint64_t sum = 0;
  for (auto x : c8.controls_of_index_bit) sum += x;
  EXPECT_EQ(sum, 255U);
  EXPECT_EQ(c8.total_routing_gates, 255U);
  EXPECT_THROW(fanout_gate_counts(0), ShapeError);
}

TEST(fanout_gate_counts, agree_with_logged_route_events) {
  for (int n = 1; n <= 5; ++n) {
    const auto r = fanout_call(basis_state(n, 0), MemoryArray::zeros(n), AccessMode::Copy);
    std::vector<std::uint64_t> per_level(n, 0);
    for (const auto& ev : r.gate_events) {
      if (ev.kind == GateKind::Route) ++per_level[ev.level];
    }
    EXPECT_EQ(per_level, fanout_gate_counts(n).controls_of_index_bit);
  }
}
