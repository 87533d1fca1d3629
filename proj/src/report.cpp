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

#include <charconv>
#include <sstream>

namespace qram {

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string index_string(Address index, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i) s[i] = index_bit(index, n, i) ? '1' : '0';
  return s;
}

std::string qutrit_string(const std::vector<Trit>& qutrits) {
  std::string s;
  s.reserve(qutrits.size());
  for (Trit t : qutrits) s.push_back(trit_char(t));
  return s;
}

std::string value_string(std::uint32_t value, int d) {
  std::string s(d, '0');
  for (int b = 0; b < d; ++b) s[d - 1 - b] = (value >> b) & 1U ? '1' : '0';
  return s;
}

Json configuration_json(const Configuration& c, int n, int d) {
  Json j;
  j["q"] = index_string(c.index, n);
  if (c.bus) {
    j["bus"] = {{"position", c.bus->position.str()},
                {"payload", c.bus->payload},
                {"direction", c.bus->direction == Heading::Down ? "down" : "up"}};
  } else {
    j["bus"] = nullptr;
  }
  j["qutrits"] = qutrit_string(c.qutrits);
  j["a"] = value_string(c.output, d);
  if (!c.memory.empty()) {
    Json cells = Json::array();
    for (auto m : c.memory) cells.push_back(value_string(m, d));
    j["memory"] = cells;
  }
  return j;
}

Json state_json(const QuantumState& state) {
  Json terms = Json::array();
  for (const auto& [c, amp] : state.amplitudes()) {
    terms.push_back({{"configuration", configuration_json(c, state.n(), state.d())},
                     {"re", amp.real()},
                     {"im", amp.imag()}});
  }
  return terms;
}

Json gate_event_json(const GateEvent& ev) {
  Json targets = Json::array();
  for (const auto& t : ev.targets) targets.push_back(t.str());
  return {{"kind", gate_kind_name(ev.kind)}, {"level", ev.level},   {"pass", ev.pass},
          {"carrier", ev.carrier},          {"control", ev.control}, {"targets", targets}};
}

namespace {

Json events_json(const std::vector<GateEvent>& events) {
  Json out = Json::array();
  for (const auto& ev : events) out.push_back(gate_event_json(ev));
  return out;
}

}  // namespace

Json fanout_report_json(const FanoutCallReport& r) {
  return {{"architecture", "fanout"},
          {"passes", r.passes},
          {"index_bus_interactions", r.index_bus_interactions},
          {"routing_nodes_traversed_per_branch", r.routing_nodes_traversed_per_branch},
          {"gate_event_count", r.gate_events.size()},
          {"final_state", state_json(r.final_state)},
          {"gate_events", events_json(r.gate_events)}};
}

Json bucket_report_json(const BucketCallReport& r) {
  return {{"architecture", "bucket"},
          {"active_switches_per_branch", r.active_switches_per_branch},
          {"time_steps", r.time_steps},
          {"steps_per_level", r.steps_per_level},
          {"gate_event_count", r.gate_events.size()},
          {"final_state", state_json(r.final_state)},
          {"gate_events", events_json(r.gate_events)}};
}

CountsRow counts_row(int n, Address k) {
  const auto fan = simulate_fanout_classical(n, k);
  const auto mod = simulate_modified_fanout(n, k);
  const auto bb = simulate_bucket_classical(n, k);
  CountsRow r;
  r.n = n;
  r.fanout_total = fan.total_elements;
  r.fanout_activated = fan.activated_count;
  r.fanout_on_path = fan.on_path_count;
  r.modified_total = mod.total_elements;
  r.modified_activated = mod.activated_count;
  r.modified_on_path = mod.on_path_count;
  r.modified_steps = mod.time_steps;
  r.bucket_active = bb.activated_count;
  r.bucket_waiting = bb.waiting_trits;
  r.bucket_steps = bb.time_steps;
  return r;
}

Json counts_json(const std::vector<CountsRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"fanout_total", r.fanout_total},
                   {"fanout_activated", r.fanout_activated},
                   {"fanout_on_path", r.fanout_on_path},
                   {"modified_total", r.modified_total},
                   {"modified_activated", r.modified_activated},
                   {"modified_on_path", r.modified_on_path},
                   {"modified_steps", r.modified_steps},
                   {"bucket_active", r.bucket_active},
                   {"bucket_waiting", r.bucket_waiting},
                   {"bucket_steps", r.bucket_steps}});
  }
  return out;
}

std::string counts_csv(const std::vector<CountsRow>& rows) {
  std::ostringstream os;
  os << "n,fanout_total,fanout_activated,fanout_on_path,modified_total,modified_activated,"
        "modified_on_path,modified_steps,bucket_active,bucket_waiting,bucket_steps\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.fanout_total << ',' << r.fanout_activated << ',' << r.fanout_on_path
       << ',' << r.modified_total << ',' << r.modified_activated << ',' << r.modified_on_path
       << ',' << r.modified_steps << ',' << r.bucket_active << ',' << r.bucket_waiting << ','
       << r.bucket_steps << '\n';
  }
  return os.str();
}

Json trace_json(const ActivationTrace& t) {
  return {{"architecture", architecture_name(t.architecture)},
          {"n", t.n},
          {"k", t.k},
          {"addressed_leaf", t.addressed_leaf},
          {"total_elements", t.total_elements},
          {"activated_count", t.activated_count},
          {"on_path_count", t.on_path_count},
          {"waiting_trits", t.waiting_trits},
          {"time_steps", t.time_steps},
          {"fanout_load", t.fanout_load},
          {"reset_complete", t.reset_complete},
          {"activated_elements", t.activated_elements},
          {"on_path_elements", t.on_path_elements}};
}

Json counts_2d_json(const std::vector<Counts2dRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"elements_1d", r.counts.elements_1d},
                   {"elements_2d", r.counts.elements_2d}});
  }
  return out;
}

std::string counts_2d_csv(const std::vector<Counts2dRow>& rows) {
  std::ostringstream os;
  os << "n,elements_1d,elements_2d\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.counts.elements_1d << ',' << r.counts.elements_2d << '\n';
  }
  return os.str();
}

std::string sweep_csv(const NoiseSweepResult& result) {
  std::ostringstream os;
  os << "architecture,n,epsilon,trials,fail_rate,ci_half,analytic\n";
  for (const auto& r : result.rows) {
    os << architecture_name(r.architecture) << ',' << r.n << ',' << format_number(r.epsilon)
       << ',' << r.trials << ','
       << (r.estimated_failure_rate ? format_number(*r.estimated_failure_rate) : "") << ','
       << (r.confidence_half_width ? format_number(*r.confidence_half_width) : "") << ','
       << format_number(r.analytic_failure_rate) << '\n';
  }
  return os.str();
}

Json sweep_json(const NoiseSweepResult& result) {
  Json out = Json::array();
  for (const auto& r : result.rows) {
    Json row{{"architecture", architecture_name(r.architecture)},
             {"n", r.n},
             {"epsilon", r.epsilon},
             {"trials", r.trials},
             {"failures", r.failures}};
    row["fail_rate"] = r.estimated_failure_rate ? Json(*r.estimated_failure_rate) : Json(nullptr);
    row["ci_half"] = r.confidence_half_width ? Json(*r.confidence_half_width) : Json(nullptr);
    row["analytic"] = r.analytic_failure_rate;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace qram
