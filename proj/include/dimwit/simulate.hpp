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

#ifndef DIMWIT_SIMULATE_HPP
#define DIMWIT_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dimwit/quantum.hpp"
#include "dimwit/witnesses.hpp"

namespace dimwit {

struct NoiseModel {
  double depolarizing_eta = 0.0;        // rho -> (1 - eta) rho + eta I / d
  std::optional<std::uint64_t> shots;   // empty: exact probabilities
};

/// Exact pair-measurement table P(1|x,y) = tr(rho_x M_y), P(2|x,y) = 1 - P(1|x,y).
ProbabilityTable born_table(const Ensemble &e, const PairMeasurementSet &ms);

/// Depolarizes every state, then optionally replaces each cell by the
/// empirical frequency of `shots` Bernoulli draws from a generator keyed by
/// (seed, x, y).
ProbabilityTable noisy_table(const Ensemble &e, const PairMeasurementSet &ms, const NoiseModel &nm,
                             std::uint64_t seed);

/// Single N-outcome measurement table P(b|x) = tr(rho_x E_b). Throws
/// Error(NotAPovm) if the effects do not sum to the identity.
ProbabilityTable guessing_table(const Ensemble &e, const std::vector<Effect> &effects,
                                const Tolerances &tol = default_tolerances());

}  // namespace dimwit

#endif  // DIMWIT_SIMULATE_HPP
