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

#include "qram/memory.hpp"
#include "qram/state.hpp"

namespace qram {

/// Reference qRAM transformation computed term by term, with no tree.
///
/// Copy: |k>|a> -> |k>|a xor f_k>. Swap (quantum memory only): the output
/// register and cell k trade contents. The state must have no bus and all
/// trits in Wait.
QuantumState ideal_qram_oracle(const QuantumState& state, const MemoryArray& memory,
                               AccessMode mode);

}  // namespace qram
