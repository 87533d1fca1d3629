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

#include <complex>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qram/tree.hpp"

namespace qram {

using Amplitude = std::complex<double>;

// Amplitudes below this magnitude are dropped after every gate.
inline constexpr double kPruneThreshold = 1e-12;
// Allowed deviation of the squared norm from one.
inline constexpr double kNormTolerance = 1e-9;
// Widest memory cell supported (cells and the output register are uint32).
inline constexpr int kMaxCellBits = 31;

/// State of one tree node element. Wait is the passive storage state.
enum class Trit : std::uint8_t { Wait = 0, Zero = 1, One = 2 };

char trit_char(Trit t);
inline Trit trit_from_bit(int bit) { return bit ? Trit::One : Trit::Zero; }
inline bool trit_active(Trit t) { return t != Trit::Wait; }
/// Routing direction stored in an active trit.
inline int trit_bit(Trit t) { return t == Trit::One ? 1 : 0; }

enum class Heading : std::uint8_t { Down = 0, Up = 1 };

/// The flying qubit currently inside the tree. The bus is the only mobile
/// carrier; while the bucket brigade loads or unloads the index register the
/// same slot holds the index qubit in flight.
struct Bus {
  Location position;
  std::uint8_t payload = 0;
  Heading direction = Heading::Down;

  auto operator<=>(const Bus&) const = default;
};

/// One computational-basis assignment of every register.
///
/// `index` packs the address register with k_0 as its most significant bit.
/// `memory` is empty unless the memory cells are quantum degrees of freedom.
struct Configuration {
  Address index = 0;
  std::optional<Bus> bus;
  std::vector<Trit> qutrits;
  std::vector<std::uint32_t> memory;
  std::uint32_t output = 0;

  auto operator<=>(const Configuration&) const = default;
};

enum class MemoryMode : std::uint8_t { Classical, Quantum };

struct StateShape {
  int n = 1;
  int d = 1;
  MemoryMode memory_mode = MemoryMode::Classical;

  bool operator==(const StateShape&) const = default;
};

/// Bit i (i = 0 is the root-level bit) of an n-bit index register value.
inline int index_bit(Address index, int n, int i) {
  return static_cast<int>((index >> (n - 1 - i)) & 1U);
}
inline Address with_index_bit(Address index, int n, int i, int bit) {
  const Address mask = Address{1} << (n - 1 - i);
  return bit ? (index | mask) : (index & ~mask);
}

/// Basis map used by every gate: rewrites the configuration in place and
/// returns the phase picked up by that basis state.
using BasisMap = std::function<Amplitude(Configuration&)>;

/// Sparse superposition over configurations.
class QuantumState {
 public:
  using Map = std::map<Configuration, Amplitude>;

  /// Validates shapes and normalization; prunes tiny amplitudes.
  QuantumState(StateShape shape, Map amplitudes);

  /// Builds a state from explicit terms; duplicate configurations are rejected.
  static QuantumState from_terms(StateShape shape,
                                 const std::vector<std::pair<Configuration, Amplitude>>& terms);

  const StateShape& shape() const { return shape_; }
  int n() const { return shape_.n; }
  int d() const { return shape_.d; }
  MemoryMode memory_mode() const { return shape_.memory_mode; }

  const Map& amplitudes() const { return amplitudes_; }
  std::size_t support_size() const { return amplitudes_.size(); }
  Amplitude amplitude(const Configuration& c) const;
  double norm_squared() const;

  /// Address register 0, no bus, all trits Wait, output 0, memory cells 0.
  Configuration blank_configuration() const;

  /// Applies a basis map to every term. The map must be injective on the
  /// support; a collision raises ProtocolError. Unit norm is re-checked.
  QuantumState apply(const BasisMap& gate) const;

 private:
  struct Unchecked {};
  QuantumState(Unchecked, StateShape shape, Map amplitudes)
      : shape_(shape), amplitudes_(std::move(amplitudes)) {}

  StateShape shape_;
  Map amplitudes_;
};

/// Address superposition sum_k amp_k |k>_Q with every other register blank.
QuantumState make_address_state(int n, const std::vector<std::pair<Address, Amplitude>>& amplitudes,
                                int d = 1);

/// Tensors a (possibly superposed) quantum memory state onto a classical-mode
/// state. Each term lists all 2^n cell values.
QuantumState attach_quantum_memory(
    const QuantumState& state,
    const std::vector<std::pair<std::vector<std::uint32_t>, Amplitude>>& memory_terms);

/// |<a|b>|^2.
double fidelity(const QuantumState& a, const QuantumState& b);

/// <a|b>.
Amplitude inner_product(const QuantumState& a, const QuantumState& b);

enum class Register : unsigned {
  Index = 1U << 0,
  Bus = 1U << 1,
  Tree = 1U << 2,
  Memory = 1U << 3,
  Output = 1U << 4,
};

/// A subset of the registers of a state.
class RegisterSet {
 public:
  RegisterSet() = default;
  RegisterSet(std::initializer_list<Register> regs);

  bool contains(Register r) const { return (bits_ & static_cast<unsigned>(r)) != 0; }
  RegisterSet complement_within(RegisterSet universe) const;
  RegisterSet intersect(RegisterSet other) const;
  bool empty() const { return bits_ == 0; }
  bool operator==(const RegisterSet&) const = default;

  /// Registers that exist for a given memory mode.
  static RegisterSet all(MemoryMode mode);

 private:
  unsigned bits_ = 0;
};

/// Configuration with every register outside `keep` reset to its blank value.
Configuration project(const Configuration& c, RegisterSet keep);

/// Rank of the reduced density matrix of `partition` (equivalently the
/// Schmidt rank across the bipartition partition | rest).
int schmidt_rank(const QuantumState& state, RegisterSet partition);

}  // namespace qram
