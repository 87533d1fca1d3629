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

#include <string>
#include <vector>

#include "json.hpp"
#include "qram/bucket.hpp"
#include "qram/classical.hpp"
#include "qram/fanout.hpp"
#include "qram/noise.hpp"
#include "qram/protocol.hpp"
#include "qram/state.hpp"

namespace qram {

using Json = nlohmann::ordered_json;

/// Address register as k_0 k_1 ... k_{n-1}.
std::string index_string(Address index, int n);
/// Trits in node order: '.' Wait, '0', '1'.
std::string qutrit_string(const std::vector<Trit>& qutrits);

/// Value as a d-character bitstring, most significant bit first.
std::string value_string(std::uint32_t value, int d);

Json configuration_json(const Configuration& c, int n, int d);
/// Terms in configuration order: [{configuration, re, im}, ...].
Json state_json(const QuantumState& state);
Json gate_event_json(const GateEvent& event);

Json fanout_report_json(const FanoutCallReport& report);
Json bucket_report_json(const BucketCallReport& report);

/// Classical resource counts of all three architectures at one n.
struct CountsRow {
  int n = 1;
  std::uint64_t fanout_total = 0;
  std::uint64_t fanout_activated = 0;
  std::uint64_t fanout_on_path = 0;
  std::uint64_t modified_total = 0;
  std::uint64_t modified_activated = 0;
  std::uint64_t modified_on_path = 0;
  int modified_steps = 0;
  std::uint64_t bucket_active = 0;
  std::uint64_t bucket_waiting = 0;
  int bucket_steps = 0;
};

/// Simulates one classical call of each architecture at address k.
CountsRow counts_row(int n, Address k = 0);
Json counts_json(const std::vector<CountsRow>& rows);
std::string counts_csv(const std::vector<CountsRow>& rows);

Json trace_json(const ActivationTrace& trace);

struct Counts2dRow {
  int n = 2;
  ElementCounts2d counts;
};
Json counts_2d_json(const std::vector<Counts2dRow>& rows);
std::string counts_2d_csv(const std::vector<Counts2dRow>& rows);

/// Columns: architecture,n,epsilon,trials,fail_rate,ci_half,analytic.
/// Analytic-only rows leave fail_rate and ci_half empty (null in JSON).
std::string sweep_csv(const NoiseSweepResult& result);
Json sweep_json(const NoiseSweepResult& result);

/// Shortest decimal text that reads back to the same double.
std::string format_number(double x);

}  // namespace qram
