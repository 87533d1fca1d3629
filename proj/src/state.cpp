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

#include <Eigen/Dense>
#include <cmath>
#include <set>
#include <string>

#include "qram/errors.hpp"

namespace qram {

namespace {

void check_shape(const StateShape& shape) {
  if (shape.n < 1 || shape.n > kMaxTreeDepth) {
    throw ShapeError("address width n must be >= 1, got " + std::to_string(shape.n));
  }
  if (shape.d < 1 || shape.d > kMaxCellBits) {
    throw ShapeError("cell width d must be in [1, " + std::to_string(kMaxCellBits) + "]");
  }
}

void check_configuration(const StateShape& shape, const Configuration& c) {
  const TreeTopology tree(shape.n);
  if (c.index >= tree.leaf_count()) throw ShapeError("index register value out of range");
  if (c.qutrits.size() != tree.node_count()) {
    throw ShapeError("configuration must carry 2^n - 1 trits");
  }
  if (c.output >> shape.d) throw ShapeError("output register value exceeds d bits");
  if (c.bus) {
    if (!tree.valid_location(c.bus->position)) throw ShapeError("bus position outside the tree");
    if (c.bus->payload > 1) throw ShapeError("bus payload must be a bit");
  }
  if (shape.memory_mode == MemoryMode::Quantum) {
    if (c.memory.size() != tree.leaf_count()) {
      throw ShapeError("quantum memory must hold 2^n cells");
    }
    for (auto cell : c.memory) {
      if (cell >> shape.d) throw ShapeError("memory cell value exceeds d bits");
    }
  } else if (!c.memory.empty()) {
    throw ShapeError("classical-memory states carry no memory cells");
  }
}

void check_norm(double norm2) {
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw NormalizationError("state is not normalized: sum |amp|^2 = " + std::to_string(norm2));
  }
}

}  // namespace

char trit_char(Trit t) {
  switch (t) {
    case Trit::Wait:
      return '.';
    case Trit::Zero:
      return '0';
    case Trit::One:
      return '1';
  }
  return '?';
}

QuantumState::QuantumState(StateShape shape, Map amplitudes)
    : shape_(shape), amplitudes_(std::move(amplitudes)) {
  check_shape(shape_);
  for (auto it = amplitudes_.begin(); it != amplitudes_.end();) {
    check_configuration(shape_, it->first);
    if (std::abs(it->second) < kPruneThreshold) {
      it = amplitudes_.erase(it);
    } else {
      ++it;
    }
  }
  check_norm(norm_squared());
}

QuantumState QuantumState::from_terms(
    StateShape shape, const std::vector<std::pair<Configuration, Amplitude>>& terms) {
  Map m;
  for (const auto& [c, amp] : terms) {
    if (!m.emplace(c, amp).second) throw ShapeError("duplicate configuration in state terms");
  }
  return QuantumState(shape, std::move(m));
}

Amplitude QuantumState::amplitude(const Configuration& c) const {
  auto it = amplitudes_.find(c);
  return it == amplitudes_.end() ? Amplitude{} : it->second;
}

double QuantumState::norm_squared() const {
  double s = 0.0;
  for (const auto& [c, amp] : amplitudes_) s += std::norm(amp);
  return s;
}

Configuration QuantumState::blank_configuration() const {
  const TreeTopology tree(shape_.n);
  Configuration c;
  c.qutrits.assign(tree.node_count(), Trit::Wait);
  if (shape_.memory_mode == MemoryMode::Quantum) c.memory.assign(tree.leaf_count(), 0);
  return c;
}

QuantumState QuantumState::apply(const BasisMap& gate) const {
  Map out;
  for (const auto& [c, amp] : amplitudes_) {
    Configuration next = c;
    const Amplitude phase = gate(next);
    const Amplitude value = amp * phase;
    if (std::abs(value) < kPruneThreshold) continue;
    if (!out.emplace(std::move(next), value).second) {
      throw ProtocolError("gate maps two configurations onto one");
    }
  }
  QuantumState result(Unchecked{}, shape_, std::move(out));
  check_norm(result.norm_squared());
  return result;
}

QuantumState make_address_state(int n, const std::vector<std::pair<Address, Amplitude>>& amplitudes,
                                 int d) {
  const StateShape shape{n, d, MemoryMode::Classical};
  check_shape(shape);
  const TreeTopology tree(n);
  if (amplitudes.empty()) throw NormalizationError("address state needs at least one term");
  std::vector<std::pair<Configuration, Amplitude>> terms;
  std::set<Address> seen;
  double norm2 = 0.0;
  for (const auto& [k, amp] : amplitudes) {
    if (k >= tree.leaf_count()) {
      throw ShapeError("address " + std::to_string(k) + " out of range for n=" +
                       std::to_string(n));
    }
    if (!seen.insert(k).second) throw ShapeError("duplicate address " + std::to_string(k));
    norm2 += std::norm(amp);
    Configuration c;
    c.index = k;
    c.qutrits.assign(tree.node_count(), Trit::Wait);
    terms.emplace_back(std::move(c), amp);
  }
  check_norm(norm2);
  return QuantumState::from_terms(shape, terms);
}

QuantumState attach_quantum_memory(
    const QuantumState& state,
    const std::vector<std::pair<std::vector<std::uint32_t>, Amplitude>>& memory_terms) {
  if (state.memory_mode() != MemoryMode::Classical) {
    throw ShapeError("state already carries quantum memory");
  }
  const StateShape shape{state.n(), state.d(), MemoryMode::Quantum};
  double norm2 = 0.0;
  for (const auto& [cells, amp] : memory_terms) norm2 += std::norm(amp);
  check_norm(norm2);
  QuantumState::Map m;
  for (const auto& [c, a] : state.amplitudes()) {
    for (const auto& [cells, b] : memory_terms) {
      Configuration joint = c;
      joint.memory = cells;
      if (!m.emplace(std::move(joint), a * b).second) {
        throw ShapeError("duplicate memory configuration");
      }
    }
  }
  return QuantumState(shape, std::move(m));
}

Amplitude inner_product(const QuantumState& a, const QuantumState& b) {
  if (!(a.shape() == b.shape())) throw ShapeError("states have different register shapes");
  const auto& small = a.support_size() <= b.support_size() ? a : b;
  const auto& large = a.support_size() <= b.support_size() ? b : a;
  Amplitude s{};
  for (const auto& [c, amp] : small.amplitudes()) {
    auto it = large.amplitudes().find(c);
    if (it == large.amplitudes().end()) continue;
    s += (&small == &a) ? std::conj(amp) * it->second : std::conj(it->second) * amp;
  }
  return s;
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  const double f = std::norm(inner_product(a, b));
  return std::min(1.0, f);
}

RegisterSet::RegisterSet(std::initializer_list<Register> regs) {
  for (auto r : regs) bits_ |= static_cast<unsigned>(r);
}

RegisterSet RegisterSet::complement_within(RegisterSet universe) const {
  RegisterSet r;
  r.bits_ = universe.bits_ & ~bits_;
  return r;
}

RegisterSet RegisterSet::intersect(RegisterSet other) const {
  RegisterSet r;
  r.bits_ = bits_ & other.bits_;
  return r;
}

RegisterSet RegisterSet::all(MemoryMode mode) {
  RegisterSet r{Register::Index, Register::Bus, Register::Tree, Register::Output};
  if (mode == MemoryMode::Quantum) r.bits_ |= static_cast<unsigned>(Register::Memory);
  return r;
}

Configuration project(const Configuration& c, RegisterSet keep) {
  Configuration p;
  if (keep.contains(Register::Index)) p.index = c.index;
  if (keep.contains(Register::Bus)) p.bus = c.bus;
  if (keep.contains(Register::Tree)) p.qutrits = c.qutrits;
  if (keep.contains(Register::Memory)) p.memory = c.memory;
  if (keep.contains(Register::Output)) p.output = c.output;
  return p;
}

int schmidt_rank(const QuantumState& state, RegisterSet partition) {
  const RegisterSet universe = RegisterSet::all(state.memory_mode());
  const RegisterSet left = partition.intersect(universe);
  const RegisterSet right = partition.complement_within(universe);
  if (left.empty() || right.empty()) {
    throw ShapeError("partition must be a nonempty proper subset of the state's registers");
  }

  std::map<Configuration, Eigen::Index> rows;
  std::map<Configuration, Eigen::Index> cols;
  for (const auto& [c, amp] : state.amplitudes()) {
    rows.emplace(project(c, left), static_cast<Eigen::Index>(rows.size()));
    cols.emplace(project(c, right), static_cast<Eigen::Index>(cols.size()));
  }
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows.size()),
                                              static_cast<Eigen::Index>(cols.size()));
  for (const auto& [c, amp] : state.amplitudes()) {
    m(rows.at(project(c, left)), cols.at(project(c, right))) += amp;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > 1e-9) ++rank;
  }
  return rank;
}

}  // namespace qram
