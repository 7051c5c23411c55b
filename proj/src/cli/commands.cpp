// Copyright 2026 The objcontract Authors
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

#include "objcontract/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "objcontract/bench.hpp"
#include "objcontract/contraction.hpp"
#include "objcontract/enumeration.hpp"
#include "objcontract/instance_io.hpp"
#include "objcontract/scaling.hpp"

namespace objcontract::cli {
namespace {

using nlohmann::json;

// Carries an exit code out of a command body.
struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

std::string join(std::span<const std::int64_t> v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::string tuple(const BinaryVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + x[i]);
  }
  return s + ")";
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Relative decrease of the absolute coefficient mass.
Rational abs_gamma(const CoefficientVector& c, const CoefficientVector& d) {
  BigInt sc = 0, sd = 0;
  for (auto v : c.values()) sc += v < 0 ? -BigInt(v) : BigInt(v);
  for (auto v : d.values()) sd += v < 0 ? -BigInt(v) : BigInt(v);
  if (sc == 0) throw std::domain_error("contraction factor of an all-zero objective");
  return Rational(sc - sd, sc);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CommandError(kExitUsage, "cannot write '" + path + "'");
  return f;
}

Instance load(const std::string& path) {
  try {
    return read_instance_file(path);
  } catch (const ParseError& e) {
    throw CommandError(kExitUsage, path + ": " + e.what());
  } catch (const DimensionError& e) {
    throw CommandError(kExitUsage, path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw CommandError(kExitUsage, e.what());
  }
}

// ---------------------------------------------------------------- contract

struct ContractArgs {
  std::string input;
  std::string output;
  std::string method = "exact";
  std::optional<std::int64_t> divisor;
  double time_limit = 600.0;
  std::string signed_mode = "reject";
  std::string trace_path;
  std::string json_path;
  std::size_t workers = 0;
};

struct ObjectiveSummary {
  CoefficientVector c;
  CoefficientVector d;
  std::string status;
  Rational gamma;
  std::optional<std::size_t> cuts, iterations;
  double runtime_ms = 0.0;
  std::optional<Rational> lambda;
  std::optional<bool> order_preserving;
  std::optional<std::vector<TracePoint>> trace;
};

int cmd_contract(const ContractArgs& a, std::ostream& out, std::ostream& err) {
  if (a.divisor && a.method != "scale-round") {
    throw CommandError(kExitUsage, "--divisor applies to --method scale-round only");
  }
  if (a.method == "scale-round" && !a.divisor) {
    throw CommandError(kExitUsage, "--method scale-round requires --divisor");
  }
  if (!a.trace_path.empty() && a.method != "exact") {
    throw CommandError(kExitUsage, "--trace requires --method exact");
  }
  if (!(a.time_limit > 0.0)) throw CommandError(kExitUsage, "--time-limit must be positive");

  const Instance inst = load(a.input);
  const bool split = a.signed_mode == "split";
  for (std::size_t i = 0; i < inst.nobjs; ++i) {
    const auto& row = inst.objectives.row(i);
    if (row.has_negative() && !(a.method == "exact" && split) && a.method != "gcd") {
      throw CommandError(kExitRefused, "objective " + std::to_string(i) +
                                           " has negative coefficients; rerun with "
                                           "--method exact --signed split");
    }
  }

  std::vector<ObjectiveSummary> summaries(inst.nobjs);
  Instance result = inst;
  if (a.method == "exact") {
    ContractionConfig config;
    config.time_limit = std::chrono::duration<double>(a.time_limit);
    config.signed_mode = split ? SignedMode::kSplit : SignedMode::kReject;
    config.emit_trace = !a.trace_path.empty() || !a.json_path.empty();
    const std::size_t workers =
        a.workers ? a.workers : std::max(1u, std::thread::hardware_concurrency());
    auto [contracted, results] = contract_instance(inst, config, workers);
    result = std::move(contracted);
    for (std::size_t i = 0; i < inst.nobjs; ++i) {
      auto& s = summaries[i];
      const auto& r = results[i];
      s.status = std::string(to_string(r.status));
      s.gamma = r.gamma;
      s.cuts = r.cuts_added;
      s.iterations = r.iterations;
      s.runtime_ms = r.elapsed.count() * 1000.0;
      s.trace = r.trace;
    }
  } else {
    std::vector<CoefficientVector> rows;
    for (std::size_t i = 0; i < inst.nobjs; ++i) {
      const auto& c = inst.objectives.row(i);
      const auto start = std::chrono::steady_clock::now();
      const ScaleReport rep = a.method == "gcd" ? gcd_scale(c) : scale_round(c, *a.divisor);
      auto& s = summaries[i];
      s.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
      s.status = "heuristic";
      s.lambda = rep.lambda;
      s.order_preserving = rep.exact;
      rows.push_back(rep.d);
    }
    result.objectives = ObjectiveMatrix(std::move(rows));
  }
  for (std::size_t i = 0; i < inst.nobjs; ++i) {
    auto& s = summaries[i];
    s.c = inst.objectives.row(i);
    s.d = result.objectives.row(i);
    if (a.method != "exact") s.gamma = abs_gamma(s.c, s.d);
  }

  std::ostringstream summary;
  summary << "method=" << a.method << '\n';
  summary << "objectives=" << inst.nobjs << '\n';
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const auto& s = summaries[i];
    const std::string p = "objective." + std::to_string(i) + '.';
    summary << p << "status=" << s.status << '\n';
    summary << p << "gamma=" << to_string(s.gamma) << '\n';
    summary << p << "gamma_pct=" << to_fixed(100 * s.gamma, 4) << '\n';
    if (s.cuts) summary << p << "cuts=" << *s.cuts << '\n';
    if (s.iterations) summary << p << "iterations=" << *s.iterations << '\n';
    summary << p << "runtime_ms=" << fixed(s.runtime_ms, 3) << '\n';
    if (s.lambda) summary << p << "lambda=" << to_string(*s.lambda) << '\n';
    if (a.method != "exact") {
      summary << p << "order_preserving="
              << (s.order_preserving ? (*s.order_preserving ? "true" : "false") : "unknown")
              << '\n';
    }
    summary << p << "coefficients=" << join(s.d.values()) << '\n';
  }

  if (a.output.empty()) {
    out << serialize_instance(result);
    err << summary.str();
  } else {
    write_instance_file(a.output, result);
    out << summary.str();
  }

  if (!a.trace_path.empty()) {
    auto f = open_out(a.trace_path);
    f << "objective,iteration,incumbent_objective,lower_bound\n";
    for (std::size_t i = 0; i < summaries.size(); ++i) {
      if (!summaries[i].trace) continue;
      for (const auto& t : *summaries[i].trace) {
        f << i << ',' << t.iteration << ',' << t.incumbent_objective << ','
          << t.lower_bound << '\n';
      }
    }
  }
  if (!a.json_path.empty()) {
    json doc;
    doc["method"] = a.method;
    doc["objectives"] = json::array();
    for (const auto& s : summaries) {
      json o;
      o["original"] = s.c.vec();
      o["d"] = s.d.vec();
      o["status"] = s.status;
      o["gamma"] = to_string(s.gamma);
      o["gamma_pct"] = to_fixed(100 * s.gamma, 4);
      o["elapsed_ms"] = s.runtime_ms;
      if (s.cuts) o["cuts_added"] = *s.cuts;
      if (s.iterations) o["iterations"] = *s.iterations;
      if (s.lambda) o["lambda"] = to_string(*s.lambda);
      if (s.order_preserving) o["order_preserving"] = *s.order_preserving;
      if (s.trace) {
        o["trace"] = json::array();
        for (const auto& t : *s.trace) {
          o["trace"].push_back({{"iteration", t.iteration},
                                {"incumbent_objective", t.incumbent_objective},
                                {"lower_bound", t.lower_bound}});
        }
      }
      doc["objectives"].push_back(std::move(o));
    }
    open_out(a.json_path) << doc.dump(2) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& original, const std::string& transformed,
               std::ostream& out) {
  const Instance a = load(original);
  const Instance b = load(transformed);
  if (a.nvars != b.nvars || a.nobjs != b.nobjs) {
    throw CommandError(kExitUsage, "instances differ in shape: " + std::to_string(a.nvars) +
                                       "x" + std::to_string(a.nobjs) + " vs " +
                                       std::to_string(b.nvars) + "x" +
                                       std::to_string(b.nobjs));
  }
  if (a.nvars > kSignatureCap) {
    throw CommandError(kExitRefused, "n=" + std::to_string(a.nvars) +
                                         " exceeds the order-check cap of " +
                                         std::to_string(kSignatureCap) + " variables");
  }
  int code = kExitOk;
  for (std::size_t i = 0; i < a.nobjs; ++i) {
    const auto reports = verify_order_preserving(a.objectives.row(i), b.objectives.row(i));
    out << "objective." << i << '=' << (reports.empty() ? "PRESERVED" : "VIOLATED") << '\n';
    for (const auto& r : reports) out << "  " << r.describe() << '\n';
    if (!reports.empty()) code = kExitViolated;
  }
  return code;
}

// ------------------------------------------------------------------ pareto

int cmd_pareto(const std::string& path, std::ostream& out) {
  const Instance inst = load(path);
  if (inst.nvars > kFeasibleCap) {
    throw CommandError(kExitRefused, "n=" + std::to_string(inst.nvars) +
                                         " exceeds the enumeration cap of " +
                                         std::to_string(kFeasibleCap) + " variables");
  }
  const ParetoSet front = pareto_front(inst);
  out << "nondominated_points=" << front.entries.size() << '\n';
  out << "efficient_solutions=" << front.efficient_solutions().size() << '\n';
  for (const auto& e : front.entries) {
    out << "point=(" << join(e.point.values, ',') << ") solutions=";
    for (std::size_t j = 0; j < e.solutions.size(); ++j) {
      if (j) out << ';';
      out << tuple(e.solutions[j]);
    }
    out << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> n_list;
  std::vector<int> k_list;
  std::vector<std::string> samplers;
  std::size_t samples_per_cell = 5;
  std::uint64_t seed = 0;
  double time_limit = 600.0;
  std::size_t workers = 1;
  std::string out = "bench.csv";
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  StudyGrid grid;
  try {
    for (const auto& s : a.samplers) grid.samplers.push_back(parse_sampler_kind(s));
    grid.n_values = a.n_list;
    grid.k_values = a.k_list;
    grid.samples_per_cell = a.samples_per_cell;
    grid.seed = a.seed;
    grid.validate();
  } catch (const std::invalid_argument& e) {
    throw CommandError(kExitUsage, e.what());
  }
  if (!(a.time_limit > 0.0)) throw CommandError(kExitUsage, "--time-limit must be positive");
  if (a.workers == 0) throw CommandError(kExitUsage, "--workers must be positive");
  ContractionConfig config;
  config.time_limit = std::chrono::duration<double>(a.time_limit);
  StudyOptions options;
  options.workers = a.workers;
  const auto records = run_study(grid, config, options);
  const StudySummary summary = summarize(records);
  open_out(a.out) << summary.csv;
  out << format_summary(summary);
  out << "rows=" << records.size() << '\n';
  out << "csv=" << a.out << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact objective-coefficient contraction for multi-objective binary programs",
               "objcontract"};
  app.require_subcommand(1);

  ContractArgs contract;
  auto* c = app.add_subcommand("contract", "Contract or rescale every objective of an instance");
  c->add_option("instance", contract.input, "Instance file")->required();
  c->add_option("-o,--output", contract.output, "Write the transformed instance here");
  c->add_option("--method", contract.method)
      ->check(CLI::IsMember({"exact", "gcd", "scale-round"}))
      ->capture_default_str();
  c->add_option("--divisor", contract.divisor, "Divisor for scale-round")
      ->check(CLI::PositiveNumber);
  c->add_option("--time-limit", contract.time_limit, "Seconds per objective")
      ->capture_default_str();
  c->add_option("--signed", contract.signed_mode)
      ->check(CLI::IsMember({"reject", "split"}))
      ->capture_default_str();
  c->add_option("--trace", contract.trace_path, "Write bound trace CSV");
  c->add_option("--json", contract.json_path, "Write a structured result file");
  c->add_option("--workers", contract.workers, "Concurrent objectives (0 = auto)")
      ->capture_default_str();

  std::string original, transformed;
  auto* v = app.add_subcommand("verify", "Check that a transformed instance keeps every order");
  v->add_option("original", original)->required();
  v->add_option("transformed", transformed)->required();

  std::string pareto_path;
  auto* p = app.add_subcommand("pareto", "Enumerate the non-dominated set");
  p->add_option("instance", pareto_path)->required();

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Randomized contraction study");
  b->add_option("--n-list", bench.n_list)->delimiter(',')->required();
  b->add_option("--k-list", bench.k_list)->delimiter(',')->required();
  b->add_option("--samplers", bench.samplers)->delimiter(',')->required();
  b->add_option("--samples-per-cell", bench.samples_per_cell)->capture_default_str();
  b->add_option("--seed", bench.seed)->capture_default_str();
  b->add_option("--time-limit", bench.time_limit)->capture_default_str();
  b->add_option("--workers", bench.workers)->capture_default_str();
  b->add_option("--out", bench.out)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_contract(contract, out, err);
    if (v->parsed()) return cmd_verify(original, transformed, out);
    if (p->parsed()) return cmd_pareto(pareto_path, out);
    if (b->parsed()) return cmd_bench(bench, out);
  } catch (const CommandError& e) {
    err << "error: " << e.what() << '\n';
    return e.code;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kExitRefused;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRefused;
  }
  return kExitUsage;
}

}  // namespace objcontract::cli
