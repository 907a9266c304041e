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

#ifndef DIMWIT_SEESAW_HPP
#define DIMWIT_SEESAW_HPP

#include <cstdint>
#include <vector>

#include "dimwit/quantum.hpp"
#include "dimwit/witnesses.hpp"

namespace dimwit {

struct SeesawConfig {
  WitnessKind witness = WitnessKind::Linear;  // Quadratic or Linear
  int n = 3;
  int d = 2;
  int restarts = 20;
  int max_iters = 500;
  double improvement_tol = 1e-9;
  std::uint64_t seed = 1;
};

struct SeesawResult {
  double best_value;
  Ensemble ensemble;                 // best restart's states
  PairMeasurementSet measurements;   // Helstrom effects for those states
  int iterations_used;               // sweeps taken by the best restart
  std::vector<double> restart_values;
};

/// Alternating maximization of W_N or V_N over pure states in C^d and binary
/// measurements. Each sweep sets every pair measurement to its Helstrom
/// effect, then moves every state to the top eigenvector of its (linearized)
/// objective. Throws Error(NonMonotonic) if a half-step loses more than the
/// monotonicity tolerance.
SeesawResult optimize(const SeesawConfig &cfg, const Tolerances &tol = default_tolerances());

/// One row of the tightness check for V_N.
struct TightnessEntry {
  int n;
  int d;
  double best_value;
  double bound;
  bool attained;  // bound - best_value <= tol
  bool asserted;  // N <= 7; larger rows are informational
};

/// (N, d) pairs at which V_N's bound is known to be attainable, N = 3..10.
std::vector<std::pair<int, int>> linear_tight_pairs();

/// Runs optimize(Linear, N, d) for each listed pair with N <= n_max.
std::vector<TightnessEntry> verify_table2(int n_max, double tol, int restarts = 20,
                                          std::uint64_t seed = 1);

}  // namespace dimwit

#endif  // DIMWIT_SEESAW_HPP
