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

#include "qram/tree.hpp"

#include <bit>

#include "qram/errors.hpp"

namespace qram {

std::string Location::str() const {
  switch (kind) {
    case Kind::RootEdge:
      return "root";
    case Kind::Node:
      return "node:" + std::to_string(id);
    case Kind::Leaf:
      return "leaf:" + std::to_string(id);
  }
  return "?";
}

TreeTopology::TreeTopology(int n) : n_(n) {
  if (n < 1 || n > kMaxTreeDepth) {
    throw ShapeError("tree depth must be in [1, " + std::to_string(kMaxTreeDepth) +
                     "], got " + std::to_string(n));
  }
}

int TreeTopology::level(NodeId v) const {
  if (!valid_node(v)) throw ShapeError("node id out of range: " + std::to_string(v));
  return std::bit_width(v + 1) - 1;
}

Location TreeTopology::child(NodeId v, int dir) const {
  if (dir != 0 && dir != 1) throw ShapeError("direction must be 0 or 1");
  const int lvl = level(v);
  const NodeId c = 2 * v + 1 + static_cast<NodeId>(dir);
  if (lvl == n_ - 1) return Location::leaf(c - node_count());
  return Location::node(c);
}

NodeId TreeTopology::parent(const Location& loc) const {
  if (!valid_location(loc)) throw ShapeError("invalid location " + loc.str());
  switch (loc.kind) {
    case Location::Kind::Leaf:
      return (loc.id + node_count() - 1) / 2;
    case Location::Kind::Node:
      if (loc.id == 0) break;
      return (loc.id - 1) / 2;
    case Location::Kind::RootEdge:
      break;
  }
  throw ShapeError("location " + loc.str() + " has no parent");
}

int TreeTopology::direction_from_parent(const Location& loc) const {
  const NodeId flat = loc.is_leaf() ? loc.id + node_count() : loc.id;
  (void)parent(loc);
  return static_cast<int>((flat - 1) % 2);
}

int TreeTopology::address_bit(Address k, int i) const {
  if (i < 0 || i >= n_) throw ShapeError("address bit index out of range");
  return static_cast<int>((k >> (n_ - 1 - i)) & 1U);
}

Path TreeTopology::path(Address k) const {
  if (k >= leaf_count()) {
    throw ShapeError("address " + std::to_string(k) + " out of range for n=" +
                     std::to_string(n_));
  }
  Path p;
  p.directions.reserve(n_);
  p.nodes.reserve(n_);
  NodeId v = 0;
  for (int i = 0; i < n_; ++i) {
    const int dir = address_bit(k, i);
    p.directions.push_back(dir);
    p.nodes.push_back(v);
    v = 2 * v + 1 + static_cast<NodeId>(dir);
  }
  return p;
}

Address TreeTopology::follow(const std::vector<int>& directions) const {
  if (static_cast<int>(directions.size()) != n_) {
    throw ShapeError("direction list length must equal tree depth");
  }
  Location loc = Location::node(0);
  for (int dir : directions) loc = child(loc.id, dir);
  return loc.id;
}

bool TreeTopology::valid_location(const Location& loc) const {
  switch (loc.kind) {
    case Location::Kind::RootEdge:
      return loc.id == 0;
    case Location::Kind::Node:
      return loc.id < node_count();
    case Location::Kind::Leaf:
      return loc.id < leaf_count();
  }
  return false;
}

Path path_for_address(int n, Address k) { return TreeTopology(n).path(k); }

std::uint64_t node_count(int n) { return TreeTopology(n).node_count(); }

}  // namespace qram
