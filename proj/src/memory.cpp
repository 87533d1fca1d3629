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

#include "qram/memory.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "qram/errors.hpp"

namespace qram {

MemoryArray::MemoryArray(int n, int d, std::vector<std::uint32_t> cells)
    : n_(n), d_(d), cells_(std::move(cells)) {
  const TreeTopology tree(n);
  if (d < 1 || d > kMaxCellBits) throw ShapeError("cell width d out of range");
  if (cells_.size() != tree.leaf_count()) {
    throw ShapeError("memory must hold 2^n = " + std::to_string(tree.leaf_count()) +
                     " cells, got " + std::to_string(cells_.size()));
  }
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    if (cells_[k] >> d) {
      throw ShapeError("cell " + std::to_string(k) + " value exceeds " + std::to_string(d) +
                       " bits");
    }
  }
}

MemoryArray MemoryArray::zeros(int n, int d) {
  return MemoryArray(n, d, std::vector<std::uint32_t>(TreeTopology(n).leaf_count(), 0));
}

MemoryArray MemoryArray::ones(int n, int d) {
  const std::uint32_t all = (std::uint32_t{1} << d) - 1;
  return MemoryArray(n, d, std::vector<std::uint32_t>(TreeTopology(n).leaf_count(), all));
}

MemoryArray MemoryArray::random(int n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, (std::uint32_t{1} << d) - 1);
  std::vector<std::uint32_t> cells(TreeTopology(n).leaf_count());
  for (auto& c : cells) c = dist(rng);
  return MemoryArray(n, d, std::move(cells));
}

MemoryArray MemoryArray::quantum(int n, int d) {
  MemoryArray m = zeros(n, d);
  m.mode_ = MemoryMode::Quantum;
  return m;
}

void MemoryArray::check_compatible(const StateShape& shape) const {
  if (shape.n != n_ || shape.d != d_) {
    throw ShapeError("memory shape (n=" + std::to_string(n_) + ", d=" + std::to_string(d_) +
                     ") does not match state (n=" + std::to_string(shape.n) +
                     ", d=" + std::to_string(shape.d) + ")");
  }
  if (shape.memory_mode != mode_) {
    throw ShapeError("memory mode of array and state differ");
  }
}

MemoryArray parse_memory(const std::string& text, std::optional<int> n, std::optional<int> d) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ShapeError(std::string("memory file is not valid JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("cells")) {
      throw ShapeError("memory JSON needs fields n and cells");
    }
    const int jn = j.at("n").get<int>();
    const int jd = j.value("d", 1);
    if (n && *n != jn) throw ShapeError("memory file n does not match the requested n");
    if (d && *d != jd) throw ShapeError("memory file d does not match the requested d");
    return MemoryArray(jn, jd, j.at("cells").get<std::vector<std::uint32_t>>());
  }

  std::vector<std::uint32_t> cells;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    std::uint32_t v = 0;
    const char* last = line.data() + e + 1;
    const auto res = std::from_chars(line.data() + b, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
      throw ShapeError("memory line is not an unsigned integer: " + line);
    }
    cells.push_back(v);
  }
  int width = n.value_or(0);
  if (!n) {
    if (cells.size() < 2 || !std::has_single_bit(cells.size())) {
      throw ShapeError("memory file length " + std::to_string(cells.size()) +
                       " is not a power of two >= 2");
    }
    width = std::countr_zero(cells.size());
  }
  int bits = d.value_or(1);
  if (!d) {
    for (auto c : cells) bits = std::max(bits, static_cast<int>(std::bit_width(c)));
  }
  return MemoryArray(width, bits, std::move(cells));
}

MemoryArray load_memory_file(const std::string& path, std::optional<int> n,
                             std::optional<int> d) {
  std::ifstream f(path);
  if (!f) throw ShapeError("cannot open memory file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_memory(buf.str(), n, d);
}

}  // namespace qram
