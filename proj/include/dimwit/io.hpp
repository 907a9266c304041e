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

#ifndef DIMWIT_IO_HPP
#define DIMWIT_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "dimwit/quantum.hpp"
#include "dimwit/seesaw.hpp"
#include "dimwit/witnesses.hpp"

namespace dimwit {

// JSON file formats. Complex numbers are [re, im] pairs and matrices are
// row-major arrays of them. Doubles are written in shortest round-trip form so
// a write followed by a read reproduces every value exactly.
//
// Ensemble:   {"dim": d, "states": [[[re, im], ...], ...]}
//          or {"dim": d, "density_matrices": [[[re, im], ...], ...]}
//             optionally with "effects": {"x,x'": matrix, ...} for all pairs.
// Table:      {"witness": ..., "N": n, "m": m, "k": k, "p": p[x-1][y-1][b-1]}

struct EnsembleDocument {
  Ensemble ensemble;
  std::optional<PairMeasurementSet> measurements;
};

std::string ensemble_to_json(const Ensemble &e, const PairMeasurementSet *measurements = nullptr);
EnsembleDocument ensemble_from_json(std::string_view text);

/// Ensemble schema plus "effects", "witness", "N", "d", "best_value",
/// "iterations_used" and "restart_values".
std::string seesaw_dump_to_json(const SeesawConfig &cfg, const SeesawResult &result);

struct TableDocument {
  WitnessKind witness;
  ProbabilityTable table;
};

std::string table_to_json(WitnessKind witness, const ProbabilityTable &t);
TableDocument table_from_json(std::string_view text);

/// Throw Error(Io) on failure.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view text);

}  // namespace dimwit

#endif  // DIMWIT_IO_HPP
