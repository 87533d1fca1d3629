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


#include "qram/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.hpp"

using namespace qram;
using namespace qram::testing;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST(state_json, configuration_fields) {
  const QuantumState s = load_index(basis_state(2, 1, 2));
  const Json j = state_json(s);
  ASSERT_EQ(j.size(), 1U);
  const Json& c = j[0]["configuration"];
  EXPECT_EQ(c["q"], "00");
  EXPECT_TRUE(c["bus"].is_null());
  EXPECT_EQ(c["qutrits"], "01.");
  EXPECT_EQ(c["a"], "00");
  EXPECT_FALSE(c.contains("memory"));
  EXPECT_EQ(j[0]["re"], 1.0);
  EXPECT_EQ(j[0]["im"], 0.0);
}

TEST(state_json, bus_and_memory) {
  QuantumState s = attach_quantum_memory(basis_state(1, 1), {{{1, 0}, 1.0}});
  s = s.apply([](Configuration& c) {
    c.bus = Bus{Location::leaf(1), 1, Heading::Up};
    c.output = 1;
    return Amplitude(1.0);
  });
  const Json c = state_json(s)[0]["configuration"];
  EXPECT_EQ(c["q"], "1");
  EXPECT_EQ(c["bus"]["position"], "leaf:1");
  EXPECT_EQ(c["bus"]["payload"], 1);
  EXPECT_EQ(c["bus"]["direction"], "up");
  EXPECT_EQ(c["a"], "1");
  EXPECT_EQ(c["memory"], Json::array({"1", "0"}));
}

TEST(state_json, deterministic_order) {
  std::mt19937_64 rng(1);
  const QuantumState s = random_address_state(3, 6, rng);
  const Json j = state_json(s);
  std::vector<std::string> qs;
  for (const auto& t : j) qs.push_back(t["configuration"]["q"]);
  EXPECT_TRUE(std::is_sorted(qs.begin(), qs.end()));
  EXPECT_EQ(state_json(s).dump(), j.dump());
}

TEST(value_string, msb_first) {
  EXPECT_EQ(value_string(5, 4), "0101");
  EXPECT_EQ(index_string(6, 3), "110");
}

TEST(sweep_csv, header_and_empty_estimate) {
  const auto t = error_scaling_table({0.01}, {10});
  const auto rows = lines(sweep_csv(t));
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_EQ(rows[0], "architecture,n,epsilon,trials,fail_rate,ci_half,analytic");
  EXPECT_EQ(rows[1].rfind("bucket,10,0.01,0,,,", 0), 0U);
  const Json j = sweep_json(t);
  EXPECT_TRUE(j[0]["fail_rate"].is_null());
}

TEST(sweep_csv, json_and_csv_carry_identical_numbers) {
  NoiseModel m;
  m.epsilon = 0.1;
  m.seed = 5;
  NoiseSweepResult r;
  r.rows.push_back(monte_carlo_failure(QramArchitecture::Bucket, 3, m, 300,
                                       MemoryArray::random(3, 1, 1)));
  const auto rows = lines(sweep_csv(r));
  const Json j = sweep_json(r)[0];
  std::vector<std::string> fields;
  std::istringstream is(rows[1]);
  std::string f;
  while (std::getline(is, f, ',')) fields.push_back(f);
  ASSERT_EQ(fields.size(), 7U);
  EXPECT_EQ(std::stod(fields[4]), j["fail_rate"].get<double>());
  EXPECT_EQ(std::stod(fields[5]), j["ci_half"].get<double>());
  EXPECT_EQ(std::stod(fields[6]), j["analytic"].get<double>());
  EXPECT_EQ(fields[4], format_number(j["fail_rate"].get<double>()));
}

TEST(counts_row, closed_forms) {
  for (int n = 1; n <= 8; ++n) {
    const auto r = counts_row(n);
    const std::uint64_t N = std::uint64_t{1} << n;
    EXPECT_EQ(r.fanout_total, 2 * (N - 1));
    EXPECT_EQ(r.fanout_activated, N - 1);
    EXPECT_EQ(r.modified_activated, static_cast<std::uint64_t>(2 * n + 1));
    EXPECT_EQ(r.bucket_active, static_cast<std::uint64_t>(n));
    EXPECT_EQ(r.bucket_waiting, N - (n + 1));
  }
  const auto csv = lines(counts_csv({counts_row(1)}));
  ASSERT_EQ(csv.size(), 2U);
  EXPECT_EQ(csv[1], "1,2,1,1,4,3,2,2,1,0,2");
}

TEST(reports, call_reports_serialize) {
  const auto fr = fanout_call(basis_state(2, 1), MemoryArray::ones(2), AccessMode::Copy);
  const Json fj = fanout_report_json(fr);
  EXPECT_EQ(fj["index_bus_interactions"], 2);
  EXPECT_EQ(fj["gate_events"].size(), fr.gate_events.size());
  const auto br = bb_call(basis_state(2, 1), MemoryArray::ones(2), AccessMode::Copy);
  const Json bj = bucket_report_json(br);
  EXPECT_EQ(bj["time_steps"], 11);
  EXPECT_EQ(bj["steps_per_level"].size(), 3U);
  EXPECT_EQ(bj["final_state"][0]["configuration"]["a"], "1");
  const Json tj = trace_json(simulate_bucket_classical(3, 5));
  EXPECT_EQ(tj["waiting_trits"], 4);
}
