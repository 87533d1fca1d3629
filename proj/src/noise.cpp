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


#include "qram/noise.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "qram/bucket.hpp"
#include "qram/errors.hpp"
#include "qram/fanout.hpp"
#include "qram/oracle.hpp"

namespace qram {

namespace {

constexpr double kFailureFidelity = 1.0 - 1e-9;

void check_n(int n) {
  if (n < 1) throw QramError("n must be at least 1, got " + std::to_string(n));
}

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw QramError("epsilon must lie in [0, 1], got " + std::to_string(epsilon));
  }
}

// Node element a fault at `event` acts on, for this configuration.
std::optional<NodeId> event_node(const GateEvent& ev, const Configuration& c,
                                 const TreeTopology& tree) {
  switch (ev.kind) {
    case GateKind::Route:
    case GateKind::Unroute:
      return ev.targets.front().id;
    case GateKind::Hop:
    case GateKind::Store:
      if (c.bus && c.bus->position.is_node() && tree.level(c.bus->position.id) == ev.level) {
        return c.bus->position.id;
      }
      return std::nullopt;
    case GateKind::HopUp: {
      if (!c.bus) return std::nullopt;
      const Location p = c.bus->position;
      const bool below = (p.is_node() && p.id != 0 && tree.level(p.id) == ev.level + 1) ||
                         (p.is_leaf() && ev.level == tree.depth() - 1);
      if (!below) return std::nullopt;
      return tree.parent(p);
    }
    case GateKind::Unstore:
      return active_path_node(c, tree, ev.level);
    default:
      return std::nullopt;
  }
}

bool carrier_at(const Configuration& c, NodeId v) {
  return c.bus && c.bus->position == Location::node(v);
}

}  // namespace

std::string_view architecture_name(QramArchitecture a) {
  return a == QramArchitecture::Bucket ? "bucket" : "fanout";
}

std::string_view channel_name(ErrorChannel c) {
  switch (c) {
    case ErrorChannel::RouteFlip:
      return "route-flip";
    case ErrorChannel::QutritDepolarize:
      return "qutrit-depolarize";
    case ErrorChannel::PayloadFlip:
      return "payload-flip";
  }
  return "unknown";
}

std::string_view counting_name(ErrorCounting c) {
  return c == ErrorCounting::PerActiveSwitch ? "per-active-switch" : "per-gate-event";
}

QramArchitecture parse_architecture(std::string_view s) {
  if (s == "bucket") return QramArchitecture::Bucket;
  if (s == "fanout") return QramArchitecture::Fanout;
  throw QramError("unknown architecture '" + std::string(s) + "'");
}

ErrorChannel parse_channel(std::string_view s) {
  for (auto c : {ErrorChannel::RouteFlip, ErrorChannel::QutritDepolarize,
                 ErrorChannel::PayloadFlip}) {
    if (s == channel_name(c)) return c;
  }
  throw QramError("unknown error channel '" + std::string(s) + "'");
}

ErrorCounting parse_counting(std::string_view s) {
  if (s == "per-active-switch") return ErrorCounting::PerActiveSwitch;
  if (s == "per-gate-event") return ErrorCounting::PerGateEvent;
  throw QramError("unknown counting mode '" + std::string(s) + "'");
}

void NoiseModel::validate() const { check_epsilon(epsilon); }

double failure_probability(double epsilon, double m) {
  check_epsilon(epsilon);
  if (m <= 0.0 || epsilon == 0.0) return 0.0;
  if (epsilon == 1.0) return 1.0;
  return -std::expm1(m * std::log1p(-epsilon));
}

double error_opportunities(QramArchitecture architecture, int n, int d, ErrorCounting counting) {
  check_n(n);
  if (d < 1) throw QramError("d must be at least 1");
  const double fanout_gates = std::ldexp(1.0, n) - 1.0;
  if (counting == ErrorCounting::PerActiveSwitch) {
    return architecture == QramArchitecture::Bucket ? n : fanout_gates;
  }
  if (architecture == QramArchitecture::Fanout) return fanout_gates * d;
  // Loading and unloading each touch level i with carrier i+1 times; every
  // pass hops down and up through n switches.
  return static_cast<double>(n) * (n + 1) + 2.0 * n * d;
}

double analytic_error(double epsilon, int n, QramArchitecture architecture) {
  check_epsilon(epsilon);
  return failure_probability(
      epsilon, error_opportunities(architecture, n, 1, ErrorCounting::PerActiveSwitch));
}

double wilson_half_width(std::uint64_t failures, std::uint64_t trials, double z) {
  if (trials == 0) throw QramError("Wilson interval needs at least one trial");
  if (failures > trials) throw QramError("more failures than trials");
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / nt;
  const double z2 = z * z;
  return z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt)) / (1.0 + z2 / nt);
}

bool is_error_opportunity(QramArchitecture architecture, ErrorCounting counting,
                          const GateEvent& ev) {
  if (counting == ErrorCounting::PerGateEvent) return is_switching_event(ev.kind);
  if (architecture == QramArchitecture::Fanout) {
    return ev.kind == GateKind::Route && ev.pass == 0;
  }
  return ev.kind == GateKind::Hop && ev.carrier < 0 && ev.pass == 0;
}

BasisMap fault_for_event(QramArchitecture architecture, ErrorChannel channel,
                         const GateEvent& event, const TreeTopology& tree, int draw) {
  // Non-identity X^a Z^b on a qutrit.
  const int a = (draw % 8 + 1) / 3;
  const int b = (draw % 8 + 1) % 3;
  return [architecture, channel, event, &tree, a, b](Configuration& c) -> Amplitude {
    const auto v = event_node(event, c, tree);
    if (!v) return 1.0;
    switch (channel) {
      case ErrorChannel::RouteFlip: {
        Trit& t = c.qutrits[*v];
        if (architecture == QramArchitecture::Fanout) {
          // The node element latches and inverts this switch.
          if (t == Trit::Wait) {
            t = Trit::One;
          } else if (t == Trit::One) {
            t = Trit::Wait;
          }
        } else if (event.kind == GateKind::Store) {
          if (c.bus) c.bus->payload ^= 1;
        } else if (trit_active(t)) {
          t = t == Trit::Zero ? Trit::One : Trit::Zero;
        }
        return 1.0;
      }
      case ErrorChannel::QutritDepolarize: {
        Trit& t = c.qutrits[*v];
        const int value = static_cast<int>(t);
        t = static_cast<Trit>((value + a) % 3);
        return std::polar(1.0, 2.0 * std::numbers::pi * b * value / 3.0);
      }
      case ErrorChannel::PayloadFlip: {
        const bool carrier = event.kind == GateKind::HopUp ? c.bus.has_value()
                                                           : carrier_at(c, *v);
        if (carrier) c.bus->payload ^= 1;
        return 1.0;
      }
    }
    return 1.0;
  };
}

NoiseSweepRow monte_carlo_failure(QramArchitecture architecture, int n, const NoiseModel& model,
                                  std::uint64_t trials, const MemoryArray& memory,
                                  AddressDistribution addresses, unsigned threads) {
  check_n(n);
  model.validate();
  if (trials == 0) throw QramError("trials must be at least 1");
  if (n > kMaxTreeDepth) throw QramError("n too large");
  if (memory.mode() != MemoryMode::Classical) {
    throw QramError("Monte Carlo runs need a classical memory array");
  }
  if (memory.n() != n) {
    throw ShapeError("memory has n=" + std::to_string(memory.n()) + ", expected " +
                     std::to_string(n));
  }
  if (addresses.kind == AddressDistribution::Kind::Fixed && (addresses.fixed >> n)) {
    throw ShapeError("fixed address out of range");
  }

  const TreeTopology tree(n);
  const Address leaves = Address{1} << n;

  auto run_trial = [&](std::uint64_t trial) -> bool {
    std::seed_seq seq{static_cast<std::uint32_t>(model.seed),
                      static_cast<std::uint32_t>(model.seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);

    std::vector<std::pair<Address, Amplitude>> terms;
    switch (addresses.kind) {
      case AddressDistribution::Kind::RandomBasis:
        terms.emplace_back(std::uniform_int_distribution<Address>(0, leaves - 1)(rng), 1.0);
        break;
      case AddressDistribution::Kind::Fixed:
        terms.emplace_back(addresses.fixed, 1.0);
        break;
      case AddressDistribution::Kind::UniformSuperposition: {
        const double amp = 1.0 / std::sqrt(static_cast<double>(leaves));
        for (Address k = 0; k < leaves; ++k) terms.emplace_back(k, amp);
        break;
      }
    }
    const QuantumState input = make_address_state(n, terms, memory.d());
    const QuantumState ideal = ideal_qram_oracle(input, memory, AccessMode::Copy);

    std::bernoulli_distribution hit(model.epsilon);
    std::uniform_int_distribution<int> pauli(0, 7);
    FaultHook hook = [&](const GateEvent& ev) -> std::optional<BasisMap> {
      if (!is_error_opportunity(architecture, model.counting, ev)) return std::nullopt;
      if (!hit(rng)) return std::nullopt;
      const int draw = model.channel == ErrorChannel::QutritDepolarize ? pauli(rng) : 0;
      return fault_for_event(architecture, model.channel, ev, tree, draw);
    };

    try {
      const QuantumState out =
          architecture == QramArchitecture::Bucket
              ? bb_call(input, memory, AccessMode::Copy, hook).final_state
              : fanout_call(input, memory, AccessMode::Copy, hook).final_state;
      return fidelity(out, ideal) < kFailureFidelity;
    } catch (const ProtocolError&) {
      // A corrupted routing pattern that the protocol cannot even execute.
      return true;
    }
  };

  std::vector<std::uint8_t> failed(trials, 0);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t t = next++; t < trials; t = next++) failed[t] = run_trial(t) ? 1 : 0;
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  NoiseSweepRow row;
  row.architecture = architecture;
  row.n = n;
  row.epsilon = model.epsilon;
  row.trials = trials;
  for (auto f : failed) row.failures += f;
  row.estimated_failure_rate = static_cast<double>(row.failures) / static_cast<double>(trials);
  row.confidence_half_width = wilson_half_width(row.failures, trials);
  row.analytic_failure_rate = failure_probability(
      model.epsilon, error_opportunities(architecture, n, memory.d(), model.counting));
  return row;
}

NoiseSweepResult error_scaling_table(const std::vector<double>& epsilons,
                                     const std::vector<int>& ns) {
  if (epsilons.empty() || ns.empty()) throw QramError("error_scaling_table needs nonempty lists");
  NoiseSweepResult result;
  for (auto arch : {QramArchitecture::Bucket, QramArchitecture::Fanout}) {
    for (double eps : epsilons) {
      for (int n : ns) {
        NoiseSweepRow row;
        row.architecture = arch;
        row.n = n;
        row.epsilon = eps;
        row.analytic_failure_rate = analytic_error(eps, n, arch);
        result.rows.push_back(row);
      }
    }
  }
  return result;
}

}  // namespace qram
