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
#include "qram/protocol.hpp"

namespace qram::detail {

// Gates shared by both architectures for moving one cell bit through the bus.

void bus_inject(ProtocolRunner& runner, int pass);
void bus_enter(ProtocolRunner& runner, int carrier);
void bus_exit(ProtocolRunner& runner, int carrier);
void memory_interaction(ProtocolRunner& runner, const MemoryArray& memory, AccessMode mode,
                        int n, int pass);
void output_swap(ProtocolRunner& runner, int n, int pass);

void require_call_input(const QuantumState& state, const MemoryArray& memory, AccessMode mode);

}  // namespace qram::detail
