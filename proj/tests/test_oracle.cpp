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


#include "qram/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

#include "qram/errors.hpp"
#include "test_util.hpp"

using namespace qram;
using namespace qram::testing;

TEST(ideal_qram_oracle, uniform_superposition_example) {
  const QuantumState in = make_address_state(2, {{0, 0.5}, {1, 0.5}, {2, 0.5}, {3, 0.5}});
  const MemoryArray mem(2, 1, {0, 1, 1, 0});
  const QuantumState out = ideal_qram_oracle(in, mem, AccessMode::Copy);
  ASSERT_EQ(out.support_size(), 4U);
  for (const auto& [c, amp] : out.amplitudes()) {
    EXPECT_EQ(c.output, mem.cell(c.index));
    EXPECT_NEAR(std::abs(amp - 0.5), 0.0, 1e-15);
  }
}

TEST(ideal_qram_oracle, zero_memory_is_identity) {
  std::mt19937_64 rng(5);
  const QuantumState in = random_address_state(3, 5, rng);
  EXPECT_NEAR(fidelity(ideal_qram_oracle(in, MemoryArray::zeros(3), AccessMode::Copy), in), 1.0,
              1e-12);
}

TEST(ideal_qram_oracle, copy_is_an_involution) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 4;
    const QuantumState in = random_address_state(n, 3, rng, 2);
    const MemoryArray mem = MemoryArray::random(n, 2, trial);
    const QuantumState twice =
        ideal_qram_oracle(ideal_qram_oracle(in, mem, AccessMode::Copy), mem, AccessMode::Copy);
    EXPECT_LT(max_amplitude_diff(twice, in), 1e-15);
  }
}

TEST(ideal_qram_oracle, copy_xors_into_preloaded_output) {
  const QuantumState in = with_output(basis_state(2, 1, 2), 3);
  const QuantumState out = ideal_qram_oracle(in, MemoryArray(2, 2, {0, 1, 2, 3}), AccessMode::Copy);
  EXPECT_EQ(out.amplitudes().begin()->first.output, 2U);
}

TEST(ideal_qram_oracle, basis_bijective_on_index_and_output) {
  for (int n = 1; n <= 3; ++n) {
    const MemoryArray mem = MemoryArray::random(n, 1, 100 + n);
    std::set<std::pair<Address, std::uint32_t>> images;
    for (Address k = 0; k < (Address{1} << n); ++k) {
      for (std::uint32_t a = 0; a < 2; ++a) {
        const QuantumState out =
            ideal_qram_oracle(with_output(basis_state(n, k), a), mem, AccessMode::Copy);
        ASSERT_EQ(out.support_size(), 1U);
        const auto& c = out.amplitudes().begin()->first;
        images.emplace(c.index, c.output);
      }
    }
    EXPECT_EQ(images.size(), std::size_t{2} << n);
  }
}

TEST(ideal_qram_oracle, swap_exchanges_cell_and_output) {
  const double h = 1.0 / std::sqrt(2.0);
  const QuantumState in = attach_quantum_memory(basis_state(1, 0), {{{0, 1}, h}, {{1, 1}, h}});
  const QuantumState out = ideal_qram_oracle(in, MemoryArray::quantum(1), AccessMode::Swap);
  for (const auto& [c, amp] : out.amplitudes()) {
    EXPECT_EQ(c.memory[0], 0U);
    EXPECT_EQ(c.memory[1], 1U);
  }
  EXPECT_EQ(schmidt_rank(out, {Register::Output}), 1);
  EXPECT_NEAR(out.norm_squared(), 1.0, 1e-12);
}

TEST(ideal_qram_oracle, rejects_mismatches) {
  EXPECT_THROW(ideal_qram_oracle(basis_state(2, 0), MemoryArray::zeros(3), AccessMode::Copy),
               ShapeError);
  EXPECT_THROW(ideal_qram_oracle(basis_state(2, 0), MemoryArray::zeros(2), AccessMode::Swap),
               ShapeError);
}
