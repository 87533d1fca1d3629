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

#include <algorithm>
#include <utility>

#include "qram/errors.hpp"

namespace qram {

QuantumState ideal_qram_oracle(const QuantumState& state, const MemoryArray& memory,
                               AccessMode mode) {
  memory.check_compatible(state.shape());
  if (mode == AccessMode::Swap && memory.mode() != MemoryMode::Quantum) {
    throw ShapeError("swap access needs quantum memory");
  }
  for (const auto& [c, amp] : state.amplitudes()) {
    if (c.bus) throw ProtocolError("oracle input must not contain a bus");
    if (std::any_of(c.qutrits.begin(), c.qutrits.end(), trit_active)) {
      throw ProtocolError("oracle input must have every trit in Wait");
    }
  }

  const bool quantum = memory.mode() == MemoryMode::Quantum;
  std::vector<std::pair<Configuration, Amplitude>> terms;
  terms.reserve(state.support_size());
  for (const auto& [in, amp] : state.amplitudes()) {
    Configuration c = in;
    if (mode == AccessMode::Swap) {
      std::swap(c.output, c.memory[c.index]);
    } else {
      c.output ^= quantum ? c.memory[c.index] : memory.cell(c.index);
    }
    terms.emplace_back(std::move(c), amp);
  }
  return QuantumState::from_terms(state.shape(), terms);
}

}  // namespace qram
