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


#include "qram/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qram/bucket.hpp"
#include "qram/classical.hpp"
#include "qram/errors.hpp"
#include "qram/fanout.hpp"
#include "qram/memory.hpp"
#include "qram/noise.hpp"
#include "qram/oracle.hpp"
#include "qram/report.hpp"

namespace qram {

namespace {

class CliFailure : public std::runtime_error {
 public:
  CliFailure(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
  int code;
};

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw CliFailure(kExitInvalid, field + ": " + what);
}

[[noreturn]] void capacity(const std::string& field, const std::string& what) {
  throw CliFailure(kExitCapacity, field + ": " + what);
}

template <typename T>
T parse_value(const std::string& field, const std::string& text) {
  std::istringstream is(text);
  T v{};
  is >> v;
  if (!is || !is.eof()) invalid(field, "cannot parse '" + text + "'");
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
  return parts;
}

// "7", "2..10" or "3,5,8".
std::vector<int> parse_int_list(const std::string& field, const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int a = parse_value<int>(field, trim(text.substr(0, dots)));
    const int b = parse_value<int>(field, trim(text.substr(dots + 2)));
    if (b < a) invalid(field, "empty range '" + text + "'");
    for (int x = a; x <= b; ++x) out.push_back(x);
  } else {
    for (const auto& p : split(text, ',')) out.push_back(parse_value<int>(field, p));
  }
  if (out.empty()) invalid(field, "no values given");
  return out;
}

std::vector<double> parse_double_list(const std::string& field, const std::string& text) {
  std::vector<double> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_value<double>(field, p));
  if (out.empty()) invalid(field, "no values given");
  return out;
}

// "uniform", "5", "0,3" (equal weights) or "0:0.6,3:0.8".
std::vector<std::pair<Address, Amplitude>> parse_addresses(const std::string& text, int n) {
  const Address leaves = Address{1} << n;
  std::vector<std::pair<Address, Amplitude>> terms;
  if (text == "uniform") {
    const double amp = 1.0 / std::sqrt(static_cast<double>(leaves));
    for (Address k = 0; k < leaves; ++k) terms.emplace_back(k, amp);
    return terms;
  }
  bool weighted = false;
  for (const auto& item : split(text, ',')) {
    const auto colon = item.find(':');
    Address k = 0;
    double amp = 1.0;
    if (colon == std::string::npos) {
      k = parse_value<Address>("--address", item);
    } else {
      weighted = true;
      k = parse_value<Address>("--address", trim(item.substr(0, colon)));
      amp = parse_value<double>("--address", trim(item.substr(colon + 1)));
    }
    if (k >= leaves) {
      invalid("--address", std::to_string(k) + " out of range for n=" + std::to_string(n));
    }
    terms.emplace_back(k, amp);
  }
  if (terms.empty()) invalid("--address", "no addresses given");
  if (!weighted) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(terms.size()));
    for (auto& t : terms) t.second = amp;
  }
  return terms;
}

MemoryArray make_memory(const std::string& source, int n, int d, std::uint64_t seed) {
  if (source == "zeros") return MemoryArray::zeros(n, d);
  if (source == "ones") return MemoryArray::ones(n, d);
  if (source == "random") return MemoryArray::random(n, d, seed);
  try {
    return load_memory_file(source, n, d);
  } catch (const QramError& e) {
    invalid("--memory", e.what());
  }
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") invalid("--format", "expected json or csv");
}

void emit(const std::string& command, const std::string& format, const std::string& out_path,
          const std::string& text, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  const char* env = std::getenv("QRAM_OUTPUT_DIR");
  fs::path target;
  if (!out_path.empty()) {
    target = out_path;
    if (env && *env && target.is_relative()) target = fs::path(env) / target;
  } else if (env && *env) {
    target = fs::path(env) / (command + "." + format);
  } else {
    out << text;
    return;
  }
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::ofstream f(target);
  if (!f) invalid("--out", "cannot write " + target.string());
  f << text;
  err << "wrote " << target.string() << '\n';
}

int quantum_cap(const std::optional<int>& max_n, int fallback, std::ostream& err) {
  if (!max_n) return fallback;
  if (*max_n < 1) invalid("--max-n", "must be at least 1");
  if (*max_n > fallback) {
    err << "warning: --max-n " << *max_n << " lifts the default cap of " << fallback
        << "; every configuration stores 2^n - 1 trits\n";
  }
  return std::min(*max_n, kMaxTreeDepth);
}

struct CallOptions {
  std::string arch = "bucket";
  int n = 3;
  int d = 1;
  std::string mode = "copy";
  std::string memory = "zeros";
  std::uint64_t seed = 0;
  std::string address = "0";
  std::string format = "json";
  std::string out;
  std::optional<int> max_n;
};

std::string state_csv(const QuantumState& s) {
  std::ostringstream os;
  os << "q,bus,qutrits,a,re,im\n";
  for (const auto& [c, amp] : s.amplitudes()) {
    os << index_string(c.index, s.n()) << ','
       << (c.bus ? c.bus->position.str() + "/" + std::to_string(c.bus->payload) : "") << ','
       << qutrit_string(c.qutrits) << ',' << value_string(c.output, s.d()) << ','
       << format_number(amp.real()) << ',' << format_number(amp.imag()) << '\n';
  }
  return os.str();
}

int cmd_call(const CallOptions& o, std::ostream& out, std::ostream& err) {
  if (o.arch != "bucket" && o.arch != "fanout") invalid("--arch", "expected bucket or fanout");
  if (o.mode != "copy" && o.mode != "swap") invalid("--mode", "expected copy or swap");
  check_format(o.format);
  if (o.n < 1) invalid("--n", "must be at least 1");
  if (o.d < 1 || o.d > kMaxCellBits) {
    invalid("--d", "must lie in 1.." + std::to_string(kMaxCellBits));
  }
  const bool swap = o.mode == "swap";
  const int cap =
      quantum_cap(o.max_n, swap ? kDefaultQuantumMemoryCap : kDefaultQuantumCap, err);
  if (o.n > cap) {
    capacity("--n", std::to_string(o.n) + " exceeds the quantum-run cap of " +
                        std::to_string(cap) + " (raise it with --max-n)");
  }

  const MemoryArray cells = make_memory(o.memory, o.n, o.d, o.seed);
  QuantumState input = make_address_state(o.n, parse_addresses(o.address, o.n), o.d);
  const AccessMode mode = swap ? AccessMode::Swap : AccessMode::Copy;
  const MemoryArray memory = swap ? MemoryArray::quantum(o.n, o.d) : cells;
  if (swap) input = attach_quantum_memory(input, {{cells.cells(), 1.0}});

  const QuantumState ideal = ideal_qram_oracle(input, memory, mode);
  Json report;
  const QuantumState* final_state = nullptr;
  std::optional<FanoutCallReport> fr;
  std::optional<BucketCallReport> br;
  if (o.arch == "fanout") {
    fr = fanout_call(input, memory, mode);
    report = fanout_report_json(*fr);
    final_state = &fr->final_state;
  } else {
    br = bb_call(input, memory, mode);
    report = bucket_report_json(*br);
    final_state = &br->final_state;
  }
  const double f = fidelity(*final_state, ideal);

  std::string text;
  if (o.format == "csv") {
    text = state_csv(*final_state);
  } else {
    Json j{{"command", "call"},    {"architecture", o.arch}, {"n", o.n},
           {"d", o.d},             {"mode", o.mode},         {"seed", o.seed},
           {"memory", cells.cells()}, {"oracle_fidelity", f},
           {"matches_oracle", f >= 1.0 - 1e-9}, {"report", report}};
    text = j.dump(2) + "\n";
  }
  emit("call", o.format, o.out, text, out, err);
  return kExitOk;
}

struct CountsOptions {
  int n_min = 1;
  int n_max = 10;
  std::string geometry = "1d";
  std::string format = "json";
  std::string out;
};

int cmd_counts(const CountsOptions& o, std::ostream& out, std::ostream& err) {
  check_format(o.format);
  if (o.geometry != "1d" && o.geometry != "2d") invalid("--geometry", "expected 1d or 2d");
  std::string text;
  if (o.geometry == "1d") {
    if (o.n_min < 1) invalid("--n-min", "must be at least 1");
    if (o.n_max < o.n_min) invalid("--n-max", "must be at least --n-min");
    if (o.n_max > kMaxClassicalDepth) {
      capacity("--n-max", "classical tables are limited to n <= " +
                              std::to_string(kMaxClassicalDepth));
    }
    std::vector<CountsRow> rows;
    for (int n = o.n_min; n <= o.n_max; ++n) rows.push_back(counts_row(n));
    text = o.format == "csv" ? counts_csv(rows) : counts_json(rows).dump(2) + "\n";
  } else {
    const int lo = std::max(o.n_min, 2);
    if (o.n_max < lo) invalid("--n-max", "2d geometry needs n >= 2");
    if (o.n_max > kMaxTreeDepth) {
      capacity("--n-max", "limited to n <= " + std::to_string(kMaxTreeDepth));
    }
    std::vector<Counts2dRow> rows;
    for (int n = lo; n <= o.n_max; ++n) rows.push_back({n, elements_2d(n)});
    text = o.format == "csv" ? counts_2d_csv(rows) : counts_2d_json(rows).dump(2) + "\n";
  }
  emit("counts", o.format, o.out, text, out, err);
  return kExitOk;
}

struct SweepOptions {
  std::string arch = "both";
  std::string n = "10";
  std::string epsilon = "0.01";
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string counting = "per-active-switch";
  std::string channel = "route-flip";
  std::string address = "random";
  std::string memory = "random";
  unsigned threads = 0;
  std::string format = "json";
  std::string out;
  std::optional<int> max_n;
};

int cmd_noise_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  check_format(o.format);
  std::vector<QramArchitecture> archs;
  if (o.arch == "both") {
    archs = {QramArchitecture::Bucket, QramArchitecture::Fanout};
  } else {
    try {
      archs = {parse_architecture(o.arch)};
    } catch (const QramError&) {
      invalid("--arch", "expected bucket, fanout or both");
    }
  }
  const auto ns = parse_int_list("--n", o.n);
  for (int n : ns) {
    if (n < 1) invalid("--n", "must be at least 1");
  }
  const auto eps = parse_double_list("--epsilon", o.epsilon);
  for (double e : eps) {
    if (!(e >= 0.0 && e <= 1.0)) invalid("--epsilon", "must lie in [0, 1]");
  }
  NoiseModel model;
  model.seed = o.seed;
  try {
    model.counting = parse_counting(o.counting);
  } catch (const QramError&) {
    invalid("--counting", "expected per-active-switch or per-gate-event");
  }
  try {
    model.channel = parse_channel(o.channel);
  } catch (const QramError&) {
    invalid("--channel", "expected route-flip, qutrit-depolarize or payload-flip");
  }

  NoiseSweepResult result;
  if (o.trials == 0) {
    // Analytic table only.
    for (auto arch : archs) {
      for (int n : ns) {
        for (double e : eps) {
          NoiseSweepRow row;
          row.architecture = arch;
          row.n = n;
          row.epsilon = e;
          row.analytic_failure_rate =
              failure_probability(e, error_opportunities(arch, n, 1, model.counting));
          result.rows.push_back(row);
        }
      }
    }
  } else {
    const int cap = quantum_cap(o.max_n, kDefaultQuantumCap, err);
    for (int n : ns) {
      if (n > cap) {
        capacity("--n", std::to_string(n) + " exceeds the quantum-run cap of " +
                            std::to_string(cap) + " (raise it with --max-n)");
      }
    }
    for (auto arch : archs) {
      for (int n : ns) {
        AddressDistribution dist;
        if (o.address == "uniform") {
          dist = AddressDistribution::uniform();
        } else if (o.address != "random") {
          const auto k = parse_value<Address>("--address", o.address);
          if (k >> n) invalid("--address", "out of range for n=" + std::to_string(n));
          dist = AddressDistribution::fixed_address(k);
        }
        const MemoryArray memory = make_memory(o.memory, n, 1, o.seed);
        for (double e : eps) {
          model.epsilon = e;
          result.rows.push_back(
              monte_carlo_failure(arch, n, model, o.trials, memory, dist, o.threads));
        }
      }
    }
  }
  const std::string text =
      o.format == "csv" ? sweep_csv(result) : sweep_json(result).dump(2) + "\n";
  emit("noise-sweep", o.format, o.out, text, out, err);
  return kExitOk;
}

struct TraceOptions {
  std::string arch = "all";
  int n = 3;
  Address address = 0;
  std::string format = "json";
  std::string out;
};

int cmd_trace(const TraceOptions& o, std::ostream& out, std::ostream& err) {
  check_format(o.format);
  if (o.n < 1) invalid("--n", "must be at least 1");
  if (o.n > kMaxClassicalDepth) {
    capacity("--n", "classical traces are limited to n <= " + std::to_string(kMaxClassicalDepth));
  }
  if (o.address >> o.n) invalid("--address", "out of range for n=" + std::to_string(o.n));
  std::vector<ActivationTrace> traces;
  if (o.arch == "fanout" || o.arch == "all") {
    traces.push_back(simulate_fanout_classical(o.n, o.address));
  }
  if (o.arch == "modified_fanout" || o.arch == "all") {
    traces.push_back(simulate_modified_fanout(o.n, o.address));
  }
  if (o.arch == "bucket" || o.arch == "all") {
    traces.push_back(simulate_bucket_classical(o.n, o.address));
  }
  if (traces.empty()) invalid("--arch", "expected fanout, modified_fanout, bucket or all");

  std::string text;
  if (o.format == "csv") {
    std::ostringstream os;
    os << "architecture,n,k,addressed_leaf,total,activated,on_path,waiting,steps\n";
    for (const auto& t : traces) {
      os << architecture_name(t.architecture) << ',' << t.n << ',' << t.k << ','
         << t.addressed_leaf << ',' << t.total_elements << ',' << t.activated_count << ','
         << t.on_path_count << ',' << t.waiting_trits << ',' << t.time_steps << '\n';
    }
    text = os.str();
  } else {
    Json j = Json::array();
    for (const auto& t : traces) j.push_back(trace_json(t));
    text = j.dump(2) + "\n";
  }
  emit("trace", o.format, o.out, text, out, err);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum RAM addressing simulator", "qramsim"};
  app.require_subcommand(1);

  CallOptions call;
  auto* c = app.add_subcommand("call", "Run one memory call and compare with the ideal output");
  c->add_option("--arch", call.arch, "bucket or fanout");
  c->add_option("--n", call.n, "Address bits");
  c->add_option("--d", call.d, "Bits per memory cell");
  c->add_option("--mode", call.mode, "copy or swap");
  c->add_option("--memory", call.memory, "zeros, ones, random or a memory file");
  c->add_option("--seed", call.seed, "Seed for random memory");
  c->add_option("--address", call.address, "k, k1,k2,..., k:amp,... or uniform");
  c->add_option("--format", call.format, "json or csv");
  c->add_option("--out", call.out, "Output file");
  c->add_option("--max-n", call.max_n, "Override the size cap");

  CountsOptions counts;
  auto* k = app.add_subcommand("counts", "Tabulate switching-element counts");
  k->add_option("--n-min", counts.n_min);
  k->add_option("--n-max", counts.n_max);
  k->add_option("--geometry", counts.geometry, "1d or 2d");
  k->add_option("--format", counts.format, "json or csv");
  k->add_option("--out", counts.out, "Output file");

  SweepOptions sweep;
  auto* s = app.add_subcommand("noise-sweep", "Monte Carlo and analytic failure rates");
  s->add_option("--arch", sweep.arch, "bucket, fanout or both");
  s->add_option("--n", sweep.n, "n, a..b or a,b,c");
  s->add_option("--epsilon", sweep.epsilon, "Comma-separated error rates");
  s->add_option("--trials", sweep.trials, "Trials per row; 0 gives the analytic table");
  s->add_option("--seed", sweep.seed);
  s->add_option("--counting", sweep.counting, "per-active-switch or per-gate-event");
  s->add_option("--channel", sweep.channel, "route-flip, qutrit-depolarize or payload-flip");
  s->add_option("--address", sweep.address, "random, uniform or a fixed address");
  s->add_option("--memory", sweep.memory, "zeros, ones, random or a memory file");
  s->add_option("--threads", sweep.threads, "Worker threads, 0 for all cores");
  s->add_option("--format", sweep.format, "json or csv");
  s->add_option("--out", sweep.out, "Output file");
  s->add_option("--max-n", sweep.max_n, "Override the size cap");

  TraceOptions trace;
  auto* t = app.add_subcommand("trace", "Classical activation trace for one address");
  t->add_option("--arch", trace.arch, "fanout, modified_fanout, bucket or all");
  t->add_option("--n", trace.n);
  t->add_option("--address", trace.address);
  t->add_option("--format", trace.format, "json or csv");
  t->add_option("--out", trace.out, "Output file");

  std::vector<std::string> argv_store{"qramsim"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (c->parsed()) return cmd_call(call, out, err);
    if (k->parsed()) return cmd_counts(counts, out, err);
    if (s->parsed()) return cmd_noise_sweep(sweep, out, err);
    return cmd_trace(trace, out, err);
  } catch (const CliFailure& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const QramError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace qram
