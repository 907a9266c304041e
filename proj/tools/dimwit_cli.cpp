// Copyright 2026 The dimwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. Talks to the library only through dimwit.h.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dimwit/dimwit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void usage_error(const std::string &message) { throw CliError{kExitUsage, message}; }

void check(dw_status status) {
  if (status == DW_OK) return;
  throw CliError{status == DW_ERR_IO ? kExitIo : kExitUsage,
                 std::string(dw_status_name(status)) + ": " + dw_last_error_message()};
}

struct Deleter {
  void operator()(dw_ensemble *p) const { dw_ensemble_free(p); }
  void operator()(dw_measurements *p) const { dw_measurements_free(p); }
  void operator()(dw_table *p) const { dw_table_free(p); }
  void operator()(dw_seesaw_result *p) const { dw_seesaw_free(p); }
  void operator()(char *p) const { dw_string_free(p); }
};
template <typename T>
using Handle = std::unique_ptr<T, Deleter>;

std::string printf_string(const char *format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

bool is_integral(double value) { return std::fabs(value - std::round(value)) <= 1e-9; }

// Integral values print without decimals, everything else to 6 decimals.
std::string format_exact_or_fixed(double value) {
  if (is_integral(value)) return printf_string("%.0f", std::round(value) + 0.0);
  return printf_string("%.6f", value);
}

// Two decimals rounded half-up, integral values plain.
std::string format_two_decimals(double value) {
  if (is_integral(value)) return printf_string("%.0f", std::round(value) + 0.0);
  return printf_string("%.2f", std::floor(value * 100.0 + 0.5) / 100.0);
}

std::string format_short(double value) { return printf_string("%.12g", value + 0.0); }

std::string format_roundtrip(double value) { return printf_string("%.17g", value); }

std::string join_columns(const std::string &label, const std::vector<std::string> &cells) {
  std::string line = label;
  line.resize(4, ' ');
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::string cell = cells[i];
    if (i + 1 < cells.size()) cell.resize(std::max<std::size_t>(cell.size() + 1, 8), ' ');
    line += cell;
  }
  return line;
}

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  std::string out;
};

dw_witness parse_witness(const std::string &name) {
  dw_witness witness;
  if (dw_parse_witness(name.c_str(), &witness) != DW_OK) {
    usage_error("unknown witness '" + name + "' (expected guessing, quadratic or linear)");
  }
  return witness;
}

void reject_out(const Globals &g, const char *command) {
  if (!g.out.empty()) usage_error(std::string("--out is not used by '") + command + "'");
}

void print_json(const nlohmann::json &doc) { std::cout << doc.dump(2) << '\n'; }

// ---- bounds ----

struct BoundsArgs {
  std::string witness;
  int n = 0;
  int d = 0;
};

void run_bounds(const Globals &g, const BoundsArgs &a) {
  reject_out(g, "bounds");
  const dw_witness w = parse_witness(a.witness);
  double q = 0.0, c = 0.0;
  int available = 0;
  check(dw_quantum_bound(w, a.n, a.d, &q));
  check(dw_classical_bound(w, a.n, a.d, &c, &available));
  if (g.json) {
    nlohmann::json doc = {{"witness", a.witness}, {"N", a.n}, {"d", a.d}, {"quantum_bound", q}};
    doc["classical_bound"] = available ? nlohmann::json(c) : nlohmann::json(nullptr);
    print_json(doc);
    return;
  }
  std::cout << "Q=" << format_exact_or_fixed(q) << ", C="
            << (available ? format_exact_or_fixed(c) : std::string("requires enumeration")) << '\n';
}

// ---- states ----

struct StatesArgs {
  int n = 0;
  int d = 0;
};

void run_states(const Globals &g, const StatesArgs &a) {
  dw_ensemble *raw = nullptr;
  check(dw_ensemble_fourier(a.n, a.d, &raw));
  Handle<dw_ensemble> ensemble(raw);
  if (g.out.empty()) {
    char *text = nullptr;
    check(dw_ensemble_to_json(ensemble.get(), nullptr, &text));
    Handle<char> owned(text);
    std::cout << owned.get() << '\n';
    return;
  }
  check(dw_ensemble_save(ensemble.get(), nullptr, g.out.c_str()));
  if (g.json) {
    print_json({{"N", a.n}, {"d", a.d}, {"path", g.out}});
  } else {
    std::cout << "wrote Fourier ensemble N=" << a.n << " d=" << a.d << " to " << g.out << '\n';
  }
}

// ---- evaluate ----

struct EvaluateArgs {
  std::string witness;
  std::string table;
  std::string ensemble;
  bool helstrom = false;
};

Handle<dw_table> table_from_ensemble(const EvaluateArgs &a, dw_witness w) {
  dw_ensemble *raw_e = nullptr;
  dw_measurements *raw_m = nullptr;
  check(dw_ensemble_load(a.ensemble.c_str(), &raw_e, &raw_m));
  Handle<dw_ensemble> ensemble(raw_e);
  Handle<dw_measurements> measurements(raw_m);
  dw_table *raw_t = nullptr;
  if (w == DW_WITNESS_GUESSING) {
    if (a.helstrom) usage_error("--helstrom applies to the quadratic and linear witnesses");
    check(dw_table_guessing_srm(ensemble.get(), &raw_t));
    return Handle<dw_table>(raw_t);
  }
  if (a.helstrom) {
    dw_measurements *built = nullptr;
    check(dw_measurements_helstrom(ensemble.get(), &built));
    measurements.reset(built);
  } else if (!measurements) {
    usage_error("ensemble file has no \"effects\"; pass --helstrom to build them");
  }
  check(dw_table_born(ensemble.get(), measurements.get(), w, &raw_t));
  return Handle<dw_table>(raw_t);
}

void run_evaluate(const Globals &g, const EvaluateArgs &a) {
  reject_out(g, "evaluate");
  const dw_witness w = parse_witness(a.witness);
  if (a.table.empty() == a.ensemble.empty()) usage_error("pass exactly one of --table or --ensemble");
  if (a.helstrom && a.ensemble.empty()) usage_error("--helstrom requires --ensemble");

  Handle<dw_table> table;
  if (!a.table.empty()) {
    dw_table *raw = nullptr;
    check(dw_table_load(a.table.c_str(), &raw));
    table.reset(raw);
  } else {
    table = table_from_ensemble(a, w);
  }
  const int n = static_cast<int>(dw_table_preparations(table.get()));
  double value = 0.0;
  check(dw_table_evaluate(table.get(), w, &value));
  int min_q = 0, min_c = 0;
  check(dw_certify_dimension(w, n, value, &min_q, &min_c));

  if (g.json) {
    nlohmann::json doc = {{"witness", a.witness}, {"N", n}, {"value", value}, {"min_quantum_d", min_q}};
    doc["min_classical_d"] = min_c > 0 ? nlohmann::json(min_c) : nlohmann::json(nullptr);
    print_json(doc);
    return;
  }
  std::cout << "witness=" << a.witness << " N=" << n << '\n';
  std::cout << "value=" << printf_string("%.6f", value + 0.0) << '\n';
  std::cout << "min quantum d=" << min_q << '\n';
  std::cout << "min classical d=" << (min_c > 0 ? std::to_string(min_c) : std::string("unknown"))
            << '\n';
}

// ---- seesaw ----

struct SeesawArgs {
  std::string witness;
  int n = 0;
  int d = 0;
  int restarts = 20;
  int max_iters = 500;
  double tol = 1e-9;
};

void run_seesaw(const Globals &g, const SeesawArgs &a) {
  dw_seesaw_config cfg;
  dw_seesaw_config_init(&cfg, parse_witness(a.witness), a.n, a.d);
  cfg.restarts = a.restarts;
  cfg.max_iters = a.max_iters;
  cfg.improvement_tol = a.tol;
  cfg.seed = g.seed;
  dw_seesaw_result *raw = nullptr;
  check(dw_seesaw_run(&cfg, &raw));
  Handle<dw_seesaw_result> result(raw);
  double bound = 0.0;
  check(dw_quantum_bound(cfg.witness, a.n, a.d, &bound));
  const double best = dw_seesaw_best_value(result.get());
  const double *restart_values = dw_seesaw_restart_values(result.get());
  const std::vector<double> values(restart_values,
                                   restart_values + dw_seesaw_restart_count(result.get()));
  if (!g.out.empty()) check(dw_seesaw_save(result.get(), g.out.c_str()));

  if (g.json) {
    nlohmann::json doc = {{"witness", a.witness},  {"N", a.n},
                          {"d", a.d},              {"restarts", a.restarts},
                          {"seed", g.seed},        {"best_value", best},
                          {"quantum_bound", bound}, {"gap", bound - best},
                          {"iterations_used", dw_seesaw_iterations_used(result.get())},
                          {"restart_values", values}};
    if (!g.out.empty()) doc["dump"] = g.out;
    print_json(doc);
    return;
  }
  std::cout << "witness=" << a.witness << " N=" << a.n << " d=" << a.d
            << " restarts=" << a.restarts << " seed=" << g.seed << '\n';
  std::cout << "best=" << printf_string("%.6f", best) << '\n';
  std::cout << "Q_d=" << printf_string("%.6f", bound) << '\n';
  std::cout << "gap=" << printf_string("%.3e", bound - best) << '\n';
  std::cout << "iterations_used=" << dw_seesaw_iterations_used(result.get()) << '\n';
  std::cout << "restart_values=";
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::cout << (i ? " " : "") << format_roundtrip(values[i]);
  }
  std::cout << '\n';
  if (!g.out.empty()) std::cout << "dump=" << g.out << '\n';
}

// ---- reproduce ----

struct ReproduceArgs {
  int table = 0;
  int nmax = 7;
  int restarts = 20;
  double tol = 1e-3;
};

void reproduce_bounds_table(const Globals &g) {
  constexpr int n = 7;
  std::vector<int> dims;
  std::vector<double> classical, quantum;
  for (int d = 2; d <= n; ++d) {
    double q = 0.0, c = 0.0;
    int available = 0;
    check(dw_quantum_bound(DW_WITNESS_QUADRATIC, n, d, &q));
    check(dw_classical_bound(DW_WITNESS_QUADRATIC, n, d, &c, &available));
    dims.push_back(d);
    classical.push_back(c);
    quantum.push_back(q);
  }
  if (g.json) {
    print_json({{"witness", "quadratic"}, {"N", n}, {"d", dims}, {"classical", classical},
                {"quantum", quantum}});
    return;
  }
  std::vector<std::string> d_cells, c_cells, q_cells;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    d_cells.push_back(std::to_string(dims[i]));
    c_cells.push_back(format_exact_or_fixed(classical[i]));
    q_cells.push_back(format_two_decimals(quantum[i]));
  }
  std::cout << "Quadratic witness bounds for N=" << n << '\n';
  std::cout << join_columns("d", d_cells) << '\n';
  std::cout << join_columns("C", c_cells) << '\n';
  std::cout << join_columns("Q", q_cells) << '\n';
}

void reproduce_tightness_table(const Globals &g, const ReproduceArgs &a) {
  std::size_t count = 0;
  const dw_status sizing = dw_verify_table2(a.nmax, a.tol, a.restarts, g.seed, nullptr, 0, &count);
  // A sizing call reports the entry count and fails only on bad arguments.
  if (count == 0) check(sizing);
  std::vector<dw_tightness_entry> entries(count);
  check(dw_verify_table2(a.nmax, a.tol, a.restarts, g.seed, entries.data(), entries.size(),
                         &count));

  if (g.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &e : entries) {
      rows.push_back({{"N", e.n}, {"d", e.d}, {"best_value", e.best_value}, {"bound", e.bound},
                      {"gap", e.bound - e.best_value}, {"attained", e.attained != 0},
                      {"asserted", e.asserted != 0}});
    }
    print_json({{"witness", "linear"}, {"restarts", a.restarts}, {"seed", g.seed},
                {"tol", a.tol}, {"entries", rows}});
    return;
  }
  std::cout << "Linear witness tightness (restarts=" << a.restarts << ", seed=" << g.seed
            << ", tol=" << printf_string("%g", a.tol) << ")\n";
  std::cout << "N   d   best         Q_d          gap         status\n";
  for (const auto &e : entries) {
    char line[160];
    std::snprintf(line, sizeof line, "%-3d %-3d %-12.6f %-12.6f %-11.3e %s%s", e.n, e.d,
                  e.best_value, e.bound, e.bound - e.best_value,
                  e.attained ? "attained" : "unattained", e.asserted ? "" : " (report only)");
    std::cout << line << '\n';
  }
}

void run_reproduce(const Globals &g, const ReproduceArgs &a) {
  reject_out(g, "reproduce");
  if (a.table == 1) {
    reproduce_bounds_table(g);
  } else {
    reproduce_tightness_table(g, a);
  }
}

// ---- classical ----

struct ClassicalArgs {
  std::string witness;
  int n = 0;
  int d = 0;
};

void run_classical(const Globals &g, const ClassicalArgs &a) {
  reject_out(g, "classical");
  const dw_witness w = parse_witness(a.witness);
  if (a.n < 1) usage_error("--N must be positive");
  double value = 0.0;
  std::vector<int> encoding(static_cast<std::size_t>(a.n));
  check(dw_classical_enumerate(w, a.n, a.d, &value, encoding.data(), encoding.size()));
  double formula = 0.0;
  int available = 0;
  check(dw_classical_bound(w, a.n, a.d, &formula, &available));
  const bool match = available && std::fabs(formula - value) <= 1e-9;

  std::string encoding_text = "(";
  for (std::size_t i = 0; i < encoding.size(); ++i) {
    encoding_text += (i ? "," : "") + std::to_string(encoding[i]);
  }
  encoding_text += ")";

  if (g.json) {
    nlohmann::json doc = {{"witness", a.witness}, {"N", a.n}, {"d", a.d},
                          {"enumerated", value},  {"encoding", encoding}};
    doc["formula"] = available ? nlohmann::json(formula) : nlohmann::json(nullptr);
    doc["match"] = available ? nlohmann::json(match) : nlohmann::json(nullptr);
    print_json(doc);
    return;
  }
  std::cout << "witness=" << a.witness << " N=" << a.n << " d=" << a.d << '\n';
  std::cout << "enumerated=" << format_short(value) << '\n';
  std::cout << "formula=" << (available ? format_short(formula) : std::string("none")) << '\n';
  std::cout << "verdict=" << (available ? (match ? "match" : "mismatch") : "no formula") << '\n';
  std::cout << "encoding=" << encoding_text << '\n';
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Dimension witnesses: bounds, ensembles, see-saw and classical enumeration"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable JSON output");
  app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--out", g.out, "Output file (states: ensemble; seesaw: dump)");

  BoundsArgs bounds;
  auto *bounds_cmd = app.add_subcommand("bounds", "Quantum and classical bounds for (N, d)");
  bounds_cmd->add_option("--witness", bounds.witness, "guessing, quadratic or linear")->required();
  bounds_cmd->add_option("--N", bounds.n, "Number of preparations")->required();
  bounds_cmd->add_option("--d", bounds.d, "Dimension")->required();

  StatesArgs states;
  auto *states_cmd = app.add_subcommand("states", "Write the Fourier ensemble");
  states_cmd->add_option("--N", states.n, "Number of preparations")->required();
  states_cmd->add_option("--d", states.d, "Dimension")->required();

  EvaluateArgs evaluate;
  auto *evaluate_cmd = app.add_subcommand("evaluate", "Evaluate a witness and certify dimension");
  evaluate_cmd->add_option("--witness", evaluate.witness, "guessing, quadratic or linear")
      ->required();
  evaluate_cmd->add_option("--table", evaluate.table, "Probability table file");
  evaluate_cmd->add_option("--ensemble", evaluate.ensemble, "Ensemble file");
  evaluate_cmd->add_flag("--helstrom", evaluate.helstrom,
                         "Use Helstrom pair measurements instead of the file's effects");

  SeesawArgs seesaw;
  auto *seesaw_cmd = app.add_subcommand("seesaw", "Numerically maximize a pair witness");
  seesaw_cmd->add_option("--witness", seesaw.witness, "quadratic or linear")->required();
  seesaw_cmd->add_option("--N", seesaw.n, "Number of preparations")->required();
  seesaw_cmd->add_option("--d", seesaw.d, "Dimension")->required();
  seesaw_cmd->add_option("--restarts", seesaw.restarts, "Random restarts")->capture_default_str();
  seesaw_cmd->add_option("--max-iters", seesaw.max_iters, "Sweeps per restart")
      ->capture_default_str();
  seesaw_cmd->add_option("--tol", seesaw.tol, "Stop when a sweep improves by less")
      ->capture_default_str();

  ReproduceArgs reproduce;
  auto *reproduce_cmd = app.add_subcommand("reproduce", "Print the reference tables");
  reproduce_cmd->add_option("--table", reproduce.table, "1: bounds for N=7; 2: tightness")
      ->required()
      ->check(CLI::Range(1, 2));
  reproduce_cmd->add_option("--nmax", reproduce.nmax, "Largest N for table 2")
      ->capture_default_str()
      ->check(CLI::Range(3, 10));
  reproduce_cmd->add_option("--restarts", reproduce.restarts, "See-saw restarts for table 2")
      ->capture_default_str();
  reproduce_cmd->add_option("--tol", reproduce.tol, "Attainment tolerance for table 2")
      ->capture_default_str();

  ClassicalArgs classical;
  auto *classical_cmd = app.add_subcommand("classical", "Enumerate deterministic strategies");
  classical_cmd->add_option("--witness", classical.witness, "guessing, quadratic or linear")
      ->required();
  classical_cmd->add_option("--N", classical.n, "Number of preparations")->required();
  classical_cmd->add_option("--d", classical.d, "Dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bounds_cmd) run_bounds(g, bounds);
    if (*states_cmd) run_states(g, states);
    if (*evaluate_cmd) run_evaluate(g, evaluate);
    if (*seesaw_cmd) run_seesaw(g, seesaw);
    if (*reproduce_cmd) run_reproduce(g, reproduce);
    if (*classical_cmd) run_classical(g, classical);
  } catch (const CliError &e) {
    std::cerr << "dimwit: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception &e) {
    std::cerr << "dimwit: " << e.what() << '\n';
    return kExitUsage;
  }
  std::cout.flush();
  return std::cout ? kExitOk : kExitIo;
}
