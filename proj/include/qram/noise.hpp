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
#include <string_view>
#include <vector>

#include "qram/memory.hpp"
#include "qram/protocol.hpp"
#include "qram/tree.hpp"

namespace qram {

enum class QramArchitecture : std::uint8_t { Bucket, Fanout };

enum class ErrorChannel : std::uint8_t { RouteFlip, QutritDepolarize, PayloadFlip };

enum class ErrorCounting : std::uint8_t { PerActiveSwitch, PerGateEvent };

std::string_view architecture_name(QramArchitecture a);
std::string_view channel_name(ErrorChannel c);
std::string_view counting_name(ErrorCounting c);
QramArchitecture parse_architecture(std::string_view s);
ErrorChannel parse_channel(std::string_view s);
ErrorCounting parse_counting(std::string_view s);

struct NoiseModel {
  double epsilon = 0.0;
  ErrorChannel channel = ErrorChannel::RouteFlip;
  ErrorCounting counting = ErrorCounting::PerActiveSwitch;
  std::uint64_t seed = 0;

  /// Throws QramError unless 0 <= epsilon <= 1.
  void validate() const;
};

/// Address register input of each trial.
struct AddressDistribution {
  enum class Kind : std::uint8_t { RandomBasis, Fixed, UniformSuperposition };
  Kind kind = Kind::RandomBasis;
  Address fixed = 0;

  static AddressDistribution random_basis() { return {}; }
  static AddressDistribution fixed_address(Address k) { return {Kind::Fixed, k}; }
  static AddressDistribution uniform() { return {Kind::UniformSuperposition, 0}; }
};

struct NoiseSweepRow {
  QramArchitecture architecture = QramArchitecture::Bucket;
  int n = 1;
  double epsilon = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  // Empty for purely analytic rows.
  std::optional<double> estimated_failure_rate;
  std::optional<double> confidence_half_width;
  double analytic_failure_rate = 0.0;
};

struct NoiseSweepResult {
  std::vector<NoiseSweepRow> rows;
};

/// Probability that at least one of the switching events of a call fails:
/// n for the bucket brigade, 2^n - 1 for the fanout.
double analytic_error(double epsilon, int n, QramArchitecture architecture);

/// Number of error opportunities of one single-bit call under `counting`.
double error_opportunities(QramArchitecture architecture, int n, int d, ErrorCounting counting);

/// 1 - (1 - epsilon)^m, accurate for small epsilon and huge m.
double failure_probability(double epsilon, double m);

/// Half-width of the Wilson score interval.
double wilson_half_width(std::uint64_t failures, std::uint64_t trials, double z = 1.96);

/// Whether `event` is a place where the model may inject an error.
bool is_error_opportunity(QramArchitecture architecture, ErrorCounting counting,
                          const GateEvent& event);

/// Fault applied just before `event`. `draw` is consulted for the random
/// generalized Pauli of the depolarizing channel and returns a value in [0, 8).
BasisMap fault_for_event(QramArchitecture architecture, ErrorChannel channel,
                         const GateEvent& event, const TreeTopology& tree, int draw);

/// Runs `trials` noisy copy-mode calls and compares each with the ideal
/// output. Trials run on `threads` workers (0 picks the hardware count); the
/// failure count does not depend on the number of workers.
NoiseSweepRow monte_carlo_failure(QramArchitecture architecture, int n, const NoiseModel& model,
                                  std::uint64_t trials, const MemoryArray& memory,
                                  AddressDistribution addresses = {}, unsigned threads = 0);

/// Analytic rows for both architectures over epsilons x ns.
NoiseSweepResult error_scaling_table(const std::vector<double>& epsilons,
                                     const std::vector<int>& ns);

}  // namespace qram
