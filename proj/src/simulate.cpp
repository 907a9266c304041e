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

#include "dimwit/simulate.hpp"

#include <algorithm>
#include <string>

#include "dimwit/error.hpp"
#include "dimwit/random.hpp"

namespace dimwit {

namespace {

void require_compatible(const Ensemble &e, const PairMeasurementSet &ms) {
  if (e.dim() != ms.dim()) {
    fail(ErrorCode::DimensionMismatch, "ensemble dim " + std::to_string(e.dim()) +
                                           " vs measurement dim " + std::to_string(ms.dim()));
  }
  if (e.size() != ms.preparations()) {
    fail(ErrorCode::DimensionMismatch, "ensemble has " + std::to_string(e.size()) +
                                           " states but measurements cover N=" +
                                           std::to_string(ms.preparations()));
  }
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

ProbabilityTable pair_table(const std::vector<DensityMatrix> &states, const PairMeasurementSet &ms) {
  const std::size_t n = states.size();
  const std::size_t m = pair_count(n);
  std::vector<double> p(n * m * 2);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const double p1 =
          clamp_probability(trace_of_product(states[x].matrix(), ms.effects()[y].matrix()).real());
      p[(x * m + y) * 2] = p1;
      p[(x * m + y) * 2 + 1] = 1.0 - p1;
    }
  }
  return ProbabilityTable(n, m, 2, std::move(p));
}

}  // namespace

ProbabilityTable born_table(const Ensemble &e, const PairMeasurementSet &ms) {
  require_compatible(e, ms);
  return pair_table({e.states().begin(), e.states().end()}, ms);
}

ProbabilityTable noisy_table(const Ensemble &e, const PairMeasurementSet &ms, const NoiseModel &nm,
                             std::uint64_t seed) {
  require_compatible(e, ms);
  if (nm.shots && *nm.shots == 0) fail(ErrorCode::BadArgument, "shots must be positive");
  std::vector<DensityMatrix> states;
  states.reserve(e.size());
  for (const auto &rho : e.states()) states.push_back(depolarize(rho, nm.depolarizing_eta));
  ProbabilityTable exact = pair_table(states, ms);
  if (!nm.shots) return exact;

  const std::size_t n = e.size();
  const std::size_t m = pair_count(n);
  std::vector<double> p(n * m * 2);
  for (std::size_t x = 1; x <= n; ++x) {
    for (std::size_t y = 1; y <= m; ++y) {
      const double p1 = exact(x, y, 1);
      CounterRng rng(CounterRng::derive(CounterRng::derive(seed, x), y));
      std::uint64_t hits = 0;
      for (std::uint64_t s = 0; s < *nm.shots; ++s) {
        if (rng.uniform() < p1) ++hits;
      }
      const double freq = double(hits) / double(*nm.shots);
      p[((x - 1) * m + (y - 1)) * 2] = freq;
      p[((x - 1) * m + (y - 1)) * 2 + 1] = 1.0 - freq;
    }
  }
  return ProbabilityTable(n, m, 2, std::move(p));
}

ProbabilityTable guessing_table(const Ensemble &e, const std::vector<Effect> &effects,
                                const Tolerances &tol) {
  const std::size_t n = e.size();
  if (effects.size() != n) {
    fail(ErrorCode::ShapeMismatch, "guessing measurement needs " + std::to_string(n) +
                                       " effects, got " + std::to_string(effects.size()));
  }
  ComplexMatrix total(e.dim());
  for (const auto &effect : effects) {
    if (effect.dim() != e.dim()) fail(ErrorCode::DimensionMismatch, "effect dim differs from ensemble");
    total += effect.matrix();
  }
  const double deviation = (total - ComplexMatrix::identity(e.dim())).max_abs();
  if (!(deviation <= tol.povm_completeness)) {
    fail(ErrorCode::NotAPovm,
         "effects sum to identity only within " + std::to_string(deviation));
  }
  std::vector<double> p(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t b = 0; b < n; ++b) {
      p[x * n + b] = clamp_probability(trace_of_product(e.states()[x].matrix(), effects[b].matrix()).real());
    }
  }
  return ProbabilityTable(n, 1, n, std::move(p));
}

}  // namespace dimwit
