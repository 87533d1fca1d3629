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

#include "qram/classical.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qram/errors.hpp"

namespace qram {

namespace {

void check_call(int n, Address k) {
  if (n < 1 || n > kMaxClassicalDepth) {
    throw ShapeError("classical simulation supports 1 <= n <= " +
                     std::to_string(kMaxClassicalDepth));
  }
  if (k >> n) {
    throw ShapeError("address " + std::to_string(k) + " out of range for n=" +
                     std::to_string(n));
  }
}

// Dual-rail encoding of the address: rails[j][b] is high iff k_j == b.
std::vector<std::array<SwitchNetlist::Net, 2>> add_rails(SwitchNetlist& net, int n, Address k) {
  std::vector<std::array<SwitchNetlist::Net, 2>> rails(n);
  for (int j = 0; j < n; ++j) {
    const int bit = index_bit(k, n, j);
    for (int b = 0; b < 2; ++b) {
      rails[j][b] = net.add_net();
      net.drive(rails[j][b], bit == b);
    }
  }
  return rails;
}

void collect(const SwitchNetlist& net, ActivationTrace& trace) {
  for (std::uint64_t t = 0; t < net.transistor_count(); ++t) {
    if (net.gate_on(t)) trace.activated_elements.push_back(t);
    if (net.conducting(t)) trace.on_path_elements.push_back(t);
  }
  trace.activated_count = trace.activated_elements.size();
  trace.on_path_count = trace.on_path_elements.size();
  trace.total_elements = net.transistor_count();
}

std::vector<std::uint64_t> rail_load(const SwitchNetlist& net,
                                     const std::vector<std::array<SwitchNetlist::Net, 2>>& rails) {
  std::vector<std::uint64_t> load(rails.size(), 0);
  for (std::uint64_t t = 0; t < net.transistor_count(); ++t) {
    const auto& tr = net.transistor(t);
    for (std::size_t j = 0; j < rails.size(); ++j) {
      for (auto r : rails[j]) {
        if (tr.gate == r || tr.source == r) ++load[j];
      }
    }
  }
  return load;
}

Address single_high(const SwitchNetlist& net, const std::vector<SwitchNetlist::Net>& leaves) {
  Address found = 0;
  int hits = 0;
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    if (net.level(leaves[k])) {
      found = k;
      ++hits;
    }
  }
  if (hits != 1) throw ProtocolError("decoder selected " + std::to_string(hits) + " cells");
  return found;
}

}  // namespace

std::string_view architecture_name(ClassicalArchitecture a) {
  switch (a) {
    case ClassicalArchitecture::Fanout:
      return "fanout";
    case ClassicalArchitecture::ModifiedFanout:
      return "modified_fanout";
    case ClassicalArchitecture::BucketBrigade:
      return "bucket";
  }
  return "unknown";
}

SwitchNetlist::Net SwitchNetlist::add_net() {
  levels_.push_back(false);
  driven_.push_back(false);
  return static_cast<Net>(levels_.size() - 1);
}

std::uint64_t SwitchNetlist::add_transistor(Net gate, Net source, Net drain) {
  transistors_.push_back({gate, source, drain});
  return transistors_.size() - 1;
}

void SwitchNetlist::drive(Net net, bool level) {
  levels_.at(net) = level;
  driven_.at(net) = true;
}

bool SwitchNetlist::conducting(std::uint64_t t) const {
  const auto& tr = transistors_.at(t);
  return levels_[tr.gate] && levels_[tr.source];
}

void SwitchNetlist::settle() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : transistors_) {
      if (levels_[t.gate] && levels_[t.source] && !levels_[t.drain] && !driven_[t.drain]) {
        levels_[t.drain] = true;
        changed = true;
      }
    }
  }
}

void TritNode::receive(int bit) {
  if (state_ != Trit::Wait) throw ProtocolError("trit already holds a value");
  state_ = trit_from_bit(bit);
}

int TritNode::route() const {
  if (state_ == Trit::Wait) throw ProtocolError("a waiting trit does not route");
  return trit_bit(state_);
}

BucketBrigadeTree::BucketBrigadeTree(int n) : tree_(n), nodes_(tree_.node_count()) {}

NodeId BucketBrigadeTree::send_bit(int bit) {
  Location at = Location::node(0);
  while (at.is_node()) {
    TritNode& node = nodes_[at.id];
    if (node.state() == Trit::Wait) {
      node.receive(bit);
      return at.id;
    }
    at = tree_.child(at.id, node.route());
  }
  throw ProtocolError("bit reached a leaf without finding a waiting trit");
}

Address BucketBrigadeTree::probe() const {
  Location at = Location::node(0);
  while (at.is_node()) at = tree_.child(at.id, nodes_[at.id].route());
  return at.id;
}

void BucketBrigadeTree::reset() {
  for (auto& node : nodes_) node.reset();
}

std::uint64_t BucketBrigadeTree::active_count() const {
  return std::count_if(nodes_.begin(), nodes_.end(),
                       [](const TritNode& t) { return trit_active(t.state()); });
}

std::uint64_t BucketBrigadeTree::waiting_count() const {
  return nodes_.size() - active_count();
}

ActivationTrace simulate_fanout_classical(int n, Address k) {
  check_call(n, k);
  const TreeTopology tree(n);
  SwitchNetlist net;
  const auto rails = add_rails(net, n, k);

  // Node input nets, then leaf nets; the output register drives the root.
  std::vector<SwitchNetlist::Net> node_net(tree.node_count());
  for (auto& x : node_net) x = net.add_net();
  std::vector<SwitchNetlist::Net> leaf_net(tree.leaf_count());
  for (auto& x : leaf_net) x = net.add_net();
  net.drive(node_net[0], true);

  for (NodeId v = 0; v < tree.node_count(); ++v) {
    for (int b = 0; b < 2; ++b) {
      const Location c = tree.child(v, b);
      const auto drain = c.is_leaf() ? leaf_net[c.id] : node_net[c.id];
      net.add_transistor(rails[tree.level(v)][b], node_net[v], drain);
    }
  }
  net.settle();

  ActivationTrace trace;
  trace.architecture = ClassicalArchitecture::Fanout;
  trace.n = n;
  trace.k = k;
  collect(net, trace);
  trace.addressed_leaf = single_high(net, leaf_net);
  trace.fanout_load = rail_load(net, rails);
  trace.time_steps = 1;
  return trace;
}

ActivationTrace simulate_modified_fanout(int n, Address k) {
  check_call(n, k);
  const TreeTopology tree(n);
  SwitchNetlist net;
  const auto rails = add_rails(net, n, k);

  // Enable nets: a node's transistors only switch on once the route above it
  // has been selected. Each transistor passes its rail to the child enable.
  std::vector<SwitchNetlist::Net> enable(tree.node_count());
  for (auto& x : enable) x = net.add_net();
  std::vector<SwitchNetlist::Net> leaf_enable(tree.leaf_count());
  for (auto& x : leaf_enable) x = net.add_net();
  net.drive(enable[0], true);

  for (NodeId v = 0; v < tree.node_count(); ++v) {
    for (int b = 0; b < 2; ++b) {
      const Location c = tree.child(v, b);
      const auto drain = c.is_leaf() ? leaf_enable[c.id] : enable[c.id];
      net.add_transistor(enable[v], rails[tree.level(v)][b], drain);
    }
  }
  // Final stage: one access transistor per cell, between the cell and the
  // output line.
  const auto output = net.add_net();
  for (Address leaf = 0; leaf < tree.leaf_count(); ++leaf) {
    const auto cell = net.add_net();
    net.drive(cell, true);
    net.add_transistor(leaf_enable[leaf], cell, output);
  }
  net.settle();

  ActivationTrace trace;
  trace.architecture = ClassicalArchitecture::ModifiedFanout;
  trace.n = n;
  trace.k = k;
  collect(net, trace);
  trace.addressed_leaf = single_high(net, leaf_enable);
  trace.fanout_load = rail_load(net, rails);
  trace.time_steps = n + 1;
  return trace;
}

ActivationTrace simulate_bucket_classical(int n, Address k) {
  check_call(n, k);
  BucketBrigadeTree bb(n);
  for (int i = 0; i < n; ++i) bb.send_bit(index_bit(k, n, i));

  ActivationTrace trace;
  trace.architecture = ClassicalArchitecture::BucketBrigade;
  trace.n = n;
  trace.k = k;
  for (NodeId v = 0; v < bb.nodes().size(); ++v) {
    if (trit_active(bb.nodes()[v].state())) trace.activated_elements.push_back(v);
  }
  trace.activated_count = trace.activated_elements.size();
  trace.on_path_elements = trace.activated_elements;
  trace.on_path_count = trace.activated_count;
  trace.total_elements = bb.nodes().size();
  trace.waiting_trits = bb.waiting_count();
  trace.addressed_leaf = bb.probe();
  trace.time_steps = 2 * n;

  bb.reset();
  trace.reset_complete = bb.active_count() == 0;
  return trace;
}

ElementCounts2d elements_2d(int n) {
  if (n < 2 || n > kMaxTreeDepth) throw ShapeError("elements_2d needs 2 <= n <= 62");
  const int rows = (n + 1) / 2;
  const int cols = n / 2;
  ElementCounts2d out;
  out.elements_1d = (std::uint64_t{1} << n) - 1;
  out.elements_2d = ((std::uint64_t{1} << rows) - 1) + ((std::uint64_t{1} << cols) - 1);
  return out;
}

}  // namespace qram
