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


#include "qram/state.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <map>

#include "qram/errors.hpp"
#include "test_util.hpp"

using namespace qram;
using namespace qram::testing;

namespace {

// Reference rank: build the dense reduced density matrix of the kept
// registers and count eigenvalues above tolerance.
int rank_by_density_matrix(const QuantumState& s, RegisterSet keep) {
  const RegisterSet rest = keep.complement_within(RegisterSet::all(s.memory_mode()));
  std::map<Configuration, int> row_id;
  std::map<Configuration, std::vector<std::pair<int, Amplitude>>> by_env;
  for (const auto& [c, amp] : s.amplitudes()) {
    const Configuration a = project(c, keep);
    const Configuration e = project(c, rest);
    const int id = row_id.emplace(a, static_cast<int>(row_id.size())).first->second;
    by_env[e].emplace_back(id, amp);
  }
  const int dim = static_cast<int>(row_id.size());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [env, col] : by_env) {
    for (const auto& [i, ai] : col) {
      for (const auto& [j, aj] : col) rho(i, j) += ai * std::conj(aj);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho);
  int rank = 0;
  for (int i = 0; i < dim; ++i) rank += eig.eigenvalues()[i] > 1e-9 ? 1 : 0;
  return rank;
}

}  // namespace

TEST(make_address_state, single_basis_state) {
  const QuantumState s = make_address_state(1, {{0, 1.0}});
  ASSERT_EQ(s.support_size(), 1U);
  const auto& [c, amp] = *s.amplitudes().begin();
  EXPECT_EQ(c.index, 0U);
  EXPECT_FALSE(c.bus.has_value());
  EXPECT_EQ(c.output, 0U);
  ASSERT_EQ(c.qutrits.size(), 1U);
  EXPECT_EQ(c.qutrits[0], Trit::Wait);
  EXPECT_EQ(amp, Amplitude(1.0));
}

TEST(make_address_state, bell_like_pair) {
  const double h = 1.0 / std::sqrt(2.0);
  const QuantumState s = make_address_state(2, {{0, h}, {3, h}});
  EXPECT_EQ(s.support_size(), 2U);
  Configuration c = s.blank_configuration();
  EXPECT_NEAR(std::abs(s.amplitude(c) - h), 0.0, 1e-15);
  c.index = 3;
  EXPECT_NEAR(std::abs(s.amplitude(c) - h), 0.0, 1e-15);
  EXPECT_EQ(c.qutrits.size(), 3U);
}

TEST(make_address_state, rejects_bad_input) {
  EXPECT_THROW(make_address_state(2, {{0, 0.6}, {1, 0.7}}), NormalizationError);
  EXPECT_THROW(make_address_state(2, {{1, 0.6}, {1, 0.8}}), ShapeError);
  EXPECT_THROW(make_address_state(2, {{4, 1.0}}), ShapeError);
  EXPECT_THROW(make_address_state(0, {{0, 1.0}}), ShapeError);
}

TEST(make_address_state, prunes_tiny_amplitudes) {
  const QuantumState s = make_address_state(2, {{0, 1.0}, {1, 1e-14}});
  EXPECT_EQ(s.support_size(), 1U);
}

TEST(fidelity, identity_orthogonal_and_overlap) {
  std::mt19937_64 rng(3);
  const QuantumState psi = random_address_state(3, 4, rng);
  EXPECT_NEAR(fidelity(psi, psi), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(basis_state(1, 0), basis_state(1, 1)), 0.0, 1e-15);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(fidelity(basis_state(1, 0), make_address_state(1, {{0, h}, {1, h}})), 0.5, 1e-12);
}

TEST(fidelity, rejects_shape_mismatch) {
  EXPECT_THROW(fidelity(basis_state(1, 0), basis_state(2, 0)), ShapeError);
  EXPECT_THROW(fidelity(basis_state(1, 0), basis_state(1, 0, 2)), ShapeError);
}

TEST(apply, collision_is_rejected) {
  const double h = 1.0 / std::sqrt(2.0);
  const QuantumState s = make_address_state(1, {{0, h}, {1, h}});
  EXPECT_THROW(s.apply([](Configuration& c) {
    c.index = 0;
    return Amplitude(1.0);
  }),
               ProtocolError);
}

TEST(apply, phases_are_multiplied_in) {
  const double h = 1.0 / std::sqrt(2.0);
  const QuantumState s = make_address_state(1, {{0, h}, {1, h}});
  const QuantumState t = s.apply([](Configuration& c) { return c.index ? Amplitude(-1.0) : 1.0; });
  Configuration c = t.blank_configuration();
  c.index = 1;
  EXPECT_NEAR(std::abs(t.amplitude(c) + h), 0.0, 1e-15);
  EXPECT_NEAR(fidelity(s, t), 0.0, 1e-15);
}

TEST(schmidt_rank, product_state) {
  EXPECT_EQ(schmidt_rank(basis_state(2, 0), {Register::Index}), 1);
}

TEST(schmidt_rank, correlated_pair) {
  const double h = 1.0 / std::sqrt(2.0);
  QuantumState::Map m;
  const QuantumState base = basis_state(2, 0);
  Configuration a = base.blank_configuration();
  Configuration b = a;
  b.index = 1;
  b.output = 1;
  m.emplace(a, h);
  m.emplace(b, h);
  const QuantumState s(base.shape(), m);
  EXPECT_EQ(schmidt_rank(s, {Register::Index}), 2);
  EXPECT_EQ(schmidt_rank(s, {Register::Output}), 2);
  // Tree and bus are blank, so they factor out.
  EXPECT_EQ(schmidt_rank(s, {Register::Tree, Register::Bus}), 1);
}

TEST(schmidt_rank, rejects_empty_or_full_partition) {
  const QuantumState s = basis_state(2, 0);
  EXPECT_THROW(schmidt_rank(s, {}), ShapeError);
  EXPECT_THROW(schmidt_rank(s, RegisterSet::all(MemoryMode::Classical)), ShapeError);
  EXPECT_THROW(schmidt_rank(s, {Register::Memory}), ShapeError);
}

TEST(schmidt_rank, agrees_with_density_matrix_rank) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> bit(0, 1);
  const std::vector<RegisterSet> partitions = {
      {Register::Index}, {Register::Output}, {Register::Index, Register::Tree}, {Register::Memory}};
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 3;
    const QuantumState addr = random_address_state(n, 1 + trial % 5, rng);
    std::vector<std::pair<std::vector<std::uint32_t>, Amplitude>> mem;
    const int mem_terms = 1 + trial % 3;
    std::set<std::vector<std::uint32_t>> seen;
    while (static_cast<int>(mem.size()) < mem_terms) {
      std::vector<std::uint32_t> cells(std::size_t{1} << n);
      for (auto& x : cells) x = bit(rng);
      if (!seen.insert(cells).second) continue;
      mem.emplace_back(cells, 1.0 / std::sqrt(static_cast<double>(mem_terms)));
    }
    QuantumState s = attach_quantum_memory(addr, mem);
    // Entangle output with index and memory cell 0.
    s = s.apply([n](Configuration& c) {
      c.output ^= static_cast<std::uint32_t>(c.index & 1U) ^ c.memory[0];
      if (c.index >> (n - 1)) c.qutrits[0] = Trit::One;
      return Amplitude(1.0);
    });
    for (const auto& p : partitions) {
      ASSERT_EQ(schmidt_rank(s, p), rank_by_density_matrix(s, p)) << "trial " << trial;
    }
  }
}

TEST(register_set, all_depends_on_memory_mode) {
  EXPECT_FALSE(RegisterSet::all(MemoryMode::Classical).contains(Register::Memory));
  EXPECT_TRUE(RegisterSet::all(MemoryMode::Quantum).contains(Register::Memory));
  const RegisterSet q{Register::Index};
  const RegisterSet rest = q.complement_within(RegisterSet::all(MemoryMode::Classical));
  EXPECT_FALSE(rest.contains(Register::Index));
  EXPECT_TRUE(rest.contains(Register::Output));
}
