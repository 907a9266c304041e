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

#include "dimwit/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "dimwit/error.hpp"
#include "json.hpp"

namespace dimwit {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    fail(ErrorCode::Parse, "complex numbers must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix &m) {
  json out = json::array();
  for (const auto &z : m.entries()) out.push_back(complex_to_json(z));
  return out;
}

ComplexMatrix matrix_from_json(const json &j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim * dim) {
    fail(ErrorCode::Parse, "matrix must hold " + std::to_string(dim * dim) + " entries");
  }
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto &z : j) entries.push_back(complex_from_json(z));
  return ComplexMatrix(dim, std::move(entries));
}

std::string pair_key(std::size_t x, std::size_t x_prime) {
  return std::to_string(x) + "," + std::to_string(x_prime);
}

// Runs `f`, prefixing any library error with `where`.
template <class F>
auto with_context(const std::string &where, F &&f) {
  try {
    return f();
  } catch (const Error &e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception &e) {
    fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
  }
}

std::size_t positive_int(const json &doc, const char *key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 1) {
    fail(ErrorCode::Parse, std::string("\"") + key + "\" must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

json ensemble_json(const Ensemble &e, const PairMeasurementSet *measurements) {
  json doc;
  doc["dim"] = e.dim();
  if (e.all_pure()) {
    json states = json::array();
    for (std::size_t x = 1; x <= e.size(); ++x) {
      json amps = json::array();
      for (const auto &z : e.pure_state(x)->amplitudes()) amps.push_back(complex_to_json(z));
      states.push_back(std::move(amps));
    }
    doc["states"] = std::move(states);
  } else {
    json mats = json::array();
    for (const auto &rho : e.states()) mats.push_back(matrix_to_json(rho.matrix()));
    doc["density_matrices"] = std::move(mats);
  }
  if (measurements) {
    json effects = json::object();
    for (std::size_t i = 0; i < measurements->effects().size(); ++i) {
      const auto [x, x_prime] = pair_at(i);
      effects[pair_key(x, x_prime)] = matrix_to_json(measurements->effects()[i].matrix());
    }
    doc["effects"] = std::move(effects);
  }
  return doc;
}

}  // namespace

std::string ensemble_to_json(const Ensemble &e, const PairMeasurementSet *measurements) {
  return ensemble_json(e, measurements).dump(2) + "\n";
}

EnsembleDocument ensemble_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) fail(ErrorCode::Parse, "ensemble file must be a JSON object");
  const std::size_t dim = positive_int(doc, "dim");

  std::optional<Ensemble> ensemble;
  if (doc.contains("states") == doc.contains("density_matrices")) {
    fail(ErrorCode::Parse, "ensemble needs exactly one of \"states\" or \"density_matrices\"");
  }
  if (doc.contains("states")) {
    const json &arr = doc["states"];
    if (!arr.is_array() || arr.empty()) fail(ErrorCode::Parse, "\"states\" must be a nonempty array");
    std::vector<StateVector> states;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      states.push_back(with_context("state " + std::to_string(i + 1), [&] {
        if (!arr[i].is_array() || arr[i].size() != dim) {
          fail(ErrorCode::Parse, "expected " + std::to_string(dim) + " amplitudes");
        }
        ComplexVector amps;
        for (const auto &z : arr[i]) amps.push_back(complex_from_json(z));
        return StateVector(std::move(amps));
      }));
    }
    ensemble.emplace(std::move(states));
  } else {
    const json &arr = doc["density_matrices"];
    if (!arr.is_array() || arr.empty()) {
      fail(ErrorCode::Parse, "\"density_matrices\" must be a nonempty array");
    }
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      states.push_back(with_context("density matrix " + std::to_string(i + 1),
                                    [&] { return DensityMatrix(matrix_from_json(arr[i], dim)); }));
    }
    ensemble.emplace(std::move(states));
  }

  std::optional<PairMeasurementSet> measurements;
  if (doc.contains("effects")) {
    const json &effects_json = doc["effects"];
    const std::size_t n = ensemble->size();
    if (!effects_json.is_object() || effects_json.size() != pair_count(n)) {
      fail(ErrorCode::Parse, "\"effects\" must map all " + std::to_string(pair_count(n)) +
                                 " pairs \"x,x'\" to matrices");
    }
    std::vector<Effect> effects;
    for (std::size_t i = 0; i < pair_count(n); ++i) {
      const auto [x, x_prime] = pair_at(i);
      const std::string key = pair_key(x, x_prime);
      if (!effects_json.contains(key)) fail(ErrorCode::Parse, "missing effect for pair " + key);
      effects.push_back(with_context("effect " + key,
                                     [&] { return Effect(matrix_from_json(effects_json[key], dim)); }));
    }
    measurements.emplace(n, std::move(effects));
  }
  return {std::move(*ensemble), std::move(measurements)};
}

std::string seesaw_dump_to_json(const SeesawConfig &cfg, const SeesawResult &result) {
  json doc = ensemble_json(result.ensemble, &result.measurements);
  doc["witness"] = std::string(witness_name(cfg.witness));
  doc["N"] = cfg.n;
  doc["d"] = cfg.d;
  doc["seed"] = cfg.seed;
  doc["best_value"] = result.best_value;
  doc["iterations_used"] = result.iterations_used;
  doc["restart_values"] = result.restart_values;
  return doc.dump(2) + "\n";
}

std::string table_to_json(WitnessKind witness, const ProbabilityTable &t) {
  json doc;
  doc["witness"] = std::string(witness_name(witness));
  doc["N"] = t.preparations();
  doc["m"] = t.measurements();
  doc["k"] = t.outcomes();
  json p = json::array();
  for (std::size_t x = 1; x <= t.preparations(); ++x) {
    json rows = json::array();
    for (std::size_t y = 1; y <= t.measurements(); ++y) {
      json cell = json::array();
      for (std::size_t b = 1; b <= t.outcomes(); ++b) cell.push_back(t(x, y, b));
      rows.push_back(std::move(cell));
    }
    p.push_back(std::move(rows));
  }
  doc["p"] = std::move(p);
  return doc.dump(2) + "\n";
}

TableDocument table_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object()) fail(ErrorCode::Parse, "table file must be a JSON object");
  if (!doc.contains("witness") || !doc["witness"].is_string()) {
    fail(ErrorCode::Parse, "\"witness\" must be a string");
  }
  const WitnessKind witness = with_context("witness", [&] {
    return parse_witness(doc["witness"].get<std::string>());
  });
  const std::size_t n = positive_int(doc, "N");
  const std::size_t m = positive_int(doc, "m");
  const std::size_t k = positive_int(doc, "k");
  const TableShape shape = shape_for(witness, n);
  if (m != shape.measurements || k != shape.outcomes) {
    fail(ErrorCode::ShapeMismatch, std::string(witness_name(witness)) + " table with N=" +
                                       std::to_string(n) + " needs m=" +
                                       std::to_string(shape.measurements) +
                                       " k=" + std::to_string(shape.outcomes));
  }
  const json &p = doc.contains("p") ? doc["p"] : json();
  if (!p.is_array() || p.size() != n) fail(ErrorCode::Parse, "\"p\" must have N rows");
  std::vector<double> values;
  values.reserve(n * m * k);
  for (std::size_t x = 0; x < n; ++x) {
    if (!p[x].is_array() || p[x].size() != m) {
      fail(ErrorCode::Parse, "p[" + std::to_string(x) + "] must have m entries");
    }
    for (std::size_t y = 0; y < m; ++y) {
      const json &cell = p[x][y];
      if (!cell.is_array() || cell.size() != k) {
        fail(ErrorCode::Parse,
             "p[" + std::to_string(x) + "][" + std::to_string(y) + "] must have k entries");
      }
      for (const auto &v : cell) {
        if (!v.is_number()) fail(ErrorCode::Parse, "probabilities must be numbers");
        values.push_back(v.get<double>());
      }
    }
  }
  return {witness, ProbabilityTable(n, m, k, std::move(values))};
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorCode::Io, "error reading '" + path + "'");
  return buf.str();
}

void write_text_file(const std::string &path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out.write(text.data(), std::streamsize(text.size()));
  out.flush();
  if (!out) fail(ErrorCode::Io, "error writing '" + path + "'");
}

}  // namespace dimwit
