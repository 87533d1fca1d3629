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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qram {

using Address = std::uint64_t;
using NodeId = std::uint64_t;

// Largest address width the tree arithmetic accepts.
inline constexpr int kMaxTreeDepth = 62;

/// A point where a flying qubit can sit: in front of the root, at an internal
/// node, or at a leaf (memory cell).
struct Location {
  enum class Kind : std::uint8_t { RootEdge, Node, Leaf };

  Kind kind = Kind::RootEdge;
  std::uint64_t id = 0;

  static Location root_edge() { return {Kind::RootEdge, 0}; }
  static Location node(NodeId v) { return {Kind::Node, v}; }
  static Location leaf(Address k) { return {Kind::Leaf, k}; }

  bool is_node() const { return kind == Kind::Node; }
  bool is_leaf() const { return kind == Kind::Leaf; }

  /// "root", "node:<id>" or "leaf:<id>".
  std::string str() const;

  auto operator<=>(const Location&) const = default;
};

/// Root-to-leaf route for one address.
struct Path {
  std::vector<int> directions;  // k_0 ... k_{n-1}; 0 routes up, 1 routes down
  std::vector<NodeId> nodes;    // one node per level, root first
};

/// Complete binary tree of depth n with level-order node numbering.
///
/// Nodes 0 .. 2^n - 2 are numbered level by level starting at the root, so
/// the children of node v are 2v+1 (direction 0) and 2v+2 (direction 1).
/// Leaf ids coincide with memory addresses. Bit k_0 of an address is its most
/// significant bit and picks the branch at the root.
class TreeTopology {
 public:
  explicit TreeTopology(int n);

  int depth() const { return n_; }
  std::uint64_t node_count() const { return (std::uint64_t{1} << n_) - 1; }
  std::uint64_t leaf_count() const { return std::uint64_t{1} << n_; }

  /// Level of an internal node (root is level 0).
  int level(NodeId v) const;
  /// First node id on a level.
  static NodeId level_start(int level) { return (NodeId{1} << level) - 1; }
  /// Number of nodes on a level.
  static std::uint64_t level_width(int level) { return std::uint64_t{1} << level; }

  /// Node or leaf reached from node v along direction `dir` (0 or 1).
  Location child(NodeId v, int dir) const;
  /// Parent node of a node or leaf; throws for the root and the root edge.
  NodeId parent(const Location& loc) const;
  /// Direction taken at the parent to reach `loc`.
  int direction_from_parent(const Location& loc) const;

  /// Bit k_i of an address (i = 0 is the root-level bit).
  int address_bit(Address k, int i) const;

  Path path(Address k) const;
  /// Leaf reached by following a direction list from the root.
  Address follow(const std::vector<int>& directions) const;

  bool valid_node(NodeId v) const { return v < node_count(); }
  bool valid_location(const Location& loc) const;

 private:
  int n_;
};

/// Directions and node ids on the root-to-leaf route for address k.
Path path_for_address(int n, Address k);

/// Number of internal switching nodes, 2^n - 1.
std::uint64_t node_count(int n);

}  // namespace qram
