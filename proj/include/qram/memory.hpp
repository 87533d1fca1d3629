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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qram/state.hpp"

namespace qram {

/// How a protocol couples the bus to the addressed cell.
enum class AccessMode : std::uint8_t { Copy, Swap };

/// 2^n cells of d bits each.
///
/// In quantum mode the cell contents live inside the QuantumState and the
/// `cells` vector here is ignored; the array only fixes the shape.
class MemoryArray {
 public:
  MemoryArray(int n, int d, std::vector<std::uint32_t> cells);

  static MemoryArray zeros(int n, int d = 1);
  static MemoryArray ones(int n, int d = 1);
  static MemoryArray random(int n, int d, std::uint64_t seed);
  /// Shape-only array for states that carry their memory as qubits.
  static MemoryArray quantum(int n, int d = 1);

  int n() const { return n_; }
  int d() const { return d_; }
  MemoryMode mode() const { return mode_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<std::uint32_t>& cells() const { return cells_; }
  std::uint32_t cell(Address k) const { return cells_.at(k); }

  /// Throws ShapeError unless the array fits `shape`.
  void check_compatible(const StateShape& shape) const;

 private:
  int n_;
  int d_;
  MemoryMode mode_ = MemoryMode::Classical;
  std::vector<std::uint32_t> cells_;
};

/// Reads a memory file: JSON {"n":..,"d":..,"cells":[..]} or plain text with
/// one cell value per line. For plain text, n is inferred from the line
/// count unless given, and d defaults to the widest value (at least 1).
MemoryArray load_memory_file(const std::string& path, std::optional<int> n = std::nullopt,
                             std::optional<int> d = std::nullopt);

/// Parses the same formats from a string.
MemoryArray parse_memory(const std::string& text, std::optional<int> n = std::nullopt,
                         std::optional<int> d = std::nullopt);

}  // namespace qram
