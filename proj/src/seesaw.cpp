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

#include "dimwit/seesaw.hpp"

#include <cmath>
#include <string>

#include "dimwit/error.hpp"
#include "dimwit/random.hpp"

namespace dimwit {

namespace {

double expectation(const ComplexMatrix &m, const ComplexVector &psi) {
  return inner_product(psi, m * std::span<const Complex>(psi)).real();
}

ComplexVector haar_random_state(CounterRng &rng, std::size_t d) {
  ComplexVector psi(d);
  for (auto &z : psi) {
    const double re = rng.normal();
    const double im = rng.normal();
    z = Complex(re, im);
  }
  const double norm = vector_norm(psi);
  for (auto &z : psi) z /= norm;
  return psi;
}

std::vector<Effect> helstrom_step(const std::vector<ComplexVector> &states, const Tolerances &tol) {
  std::vector<Effect> effects;
  effects.reserve(pair_count(states.size()));
  for (std::size_t i = 0; i < pair_count(states.size()); ++i) {
    const auto [x, x_prime] = pair_at(i);
    const ComplexMatrix diff =
        ComplexMatrix::projector(states[x - 1]) - ComplexMatrix::projector(states[x_prime - 1]);
    effects.emplace_back(positive_part_projector(diff, tol), tol);
  }
  return effects;
}

std::vector<double> differences(const std::vector<ComplexVector> &states,
                                const std::vector<Effect> &effects) {
  std::vector<double> diffs(effects.size());
  for (std::size_t i = 0; i < effects.size(); ++i) {
    const auto [x, x_prime] = pair_at(i);
    const ComplexMatrix &m = effects[i].matrix();
    diffs[i] = expectation(m, states[x - 1]) - expectation(m, states[x_prime - 1]);
  }
  return diffs;
}

double objective(WitnessKind kind, const std::vector<double> &diffs) {
  double s = 0.0;
  for (double v : diffs) s += (kind == WitnessKind::Quadratic) ? v * v : v;
  return s;
}

// Top eigenvector; among (near-)degenerate top eigenvectors take the one whose
// first non-negligible amplitude is largest, then rotate that amplitude to be
// real and positive.
ComplexVector top_eigenvector(const ComplexMatrix &h, const Tolerances &tol) {
  const EigenDecomposition eig = eig_hermitian(h, tol);
  const double top = eig.eigenvalues.front();
  auto leading = [&](const ComplexVector &v) -> std::size_t {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (std::abs(v[k]) > tol.zero_eigenvalue) return k;
    }
    return 0;
  };
  std::size_t chosen = 0;
  for (std::size_t i = 1; i < eig.eigenvalues.size(); ++i) {
    if (top - eig.eigenvalues[i] > tol.zero_eigenvalue) break;
    const auto &cand = eig.eigenvectors[i];
    const auto &best = eig.eigenvectors[chosen];
    if (std::abs(cand[leading(cand)]) > std::abs(best[leading(best)])) chosen = i;
  }
  ComplexVector v = eig.eigenvectors[chosen];
  const Complex lead = v[leading(v)];
  const Complex phase = std::conj(lead) / std::abs(lead);
  for (auto &z : v) z *= phase;
  return v;
}

// Gradient of the objective with respect to rho_x, given fixed measurements.
ComplexMatrix state_hamiltonian(WitnessKind kind, std::size_t x, std::size_t n, std::size_t d,
                                const std::vector<Effect> &effects,
                                const std::vector<double> &diffs) {
  ComplexMatrix h(d);
  auto weight = [&](std::size_t idx) {
    return kind == WitnessKind::Quadratic ? 2.0 * diffs[idx] : 1.0;
  };
  for (std::size_t x_prime = 1; x_prime < x; ++x_prime) {
    const std::size_t idx = pair_index(x, x_prime);
    h += effects[idx].matrix() * Complex(weight(idx));
  }
  for (std::size_t x_prime = x + 1; x_prime <= n; ++x_prime) {
    const std::size_t idx = pair_index(x_prime, x);
    h -= effects[idx].matrix() * Complex(weight(idx));
  }
  return h;
}

void check_monotone(double before, double after, const char *step, int restart, int iter,
                    const Tolerances &tol) {
  if (after < before - tol.monotonicity) {
    fail(ErrorCode::NonMonotonic, std::string(step) + " decreased the objective from " +
                                      std::to_string(before) + " to " + std::to_string(after) +
                                      " (restart " + std::to_string(restart) + ", sweep " +
                                      std::to_string(iter) + ")");
  }
}

struct RestartOutcome {
  double value;
  std::vector<ComplexVector> states;
  std::vector<Effect> effects;
  int iterations;
};

RestartOutcome run_restart(const SeesawConfig &cfg, int restart, const Tolerances &tol) {
  const std::size_t n = std::size_t(cfg.n);
  const std::size_t d = std::size_t(cfg.d);
  CounterRng rng(CounterRng::derive(cfg.seed, std::uint64_t(restart)));
  std::vector<ComplexVector> states;
  states.reserve(n);
  for (std::size_t x = 0; x < n; ++x) states.push_back(haar_random_state(rng, d));

  std::vector<Effect> effects = helstrom_step(states, tol);
  std::vector<double> diffs = differences(states, effects);
  double value = objective(cfg.witness, diffs);
  int iter = 0;
  while (iter < cfg.max_iters) {
    ++iter;
    const double sweep_start = value;

    std::vector<ComplexVector> next(n);
    for (std::size_t x = 1; x <= n; ++x) {
      next[x - 1] = top_eigenvector(state_hamiltonian(cfg.witness, x, n, d, effects, diffs), tol);
    }
    states = std::move(next);
    diffs = differences(states, effects);
    const double after_states = objective(cfg.witness, diffs);
    check_monotone(value, after_states, "state update", restart, iter, tol);

    effects = helstrom_step(states, tol);
    diffs = differences(states, effects);
    value = objective(cfg.witness, diffs);
    check_monotone(after_states, value, "measurement update", restart, iter, tol);

    if (value - sweep_start < cfg.improvement_tol) break;
  }
  return {value, std::move(states), std::move(effects), iter};
}

}  // namespace

SeesawResult optimize(const SeesawConfig &cfg, const Tolerances &tol) {
  if (cfg.witness == WitnessKind::Guessing) {
    fail(ErrorCode::BadArgument, "see-saw supports the quadratic and linear witnesses only");
  }
  if (cfg.d < 2 || cfg.d > cfg.n) {
    fail(ErrorCode::BadArgument, "see-saw needs 2 <= d <= N, got N=" + std::to_string(cfg.n) +
                                     " d=" + std::to_string(cfg.d));
  }
  if (cfg.restarts < 1 || cfg.max_iters < 1 || !(cfg.improvement_tol > 0.0)) {
    fail(ErrorCode::BadArgument, "see-saw needs restarts >= 1, max_iters >= 1, improvement_tol > 0");
  }

  std::vector<double> restart_values;
  restart_values.reserve(std::size_t(cfg.restarts));
  std::optional<RestartOutcome> best;
  for (int r = 0; r < cfg.restarts; ++r) {
    RestartOutcome outcome = run_restart(cfg, r, tol);
    restart_values.push_back(outcome.value);
    if (!best || outcome.value > best->value) best = std::move(outcome);
  }

  std::vector<StateVector> states;
  for (auto &psi : best->states) states.emplace_back(std::move(psi), tol);
  return SeesawResult{best->value, Ensemble(std::move(states)),
                      PairMeasurementSet(std::size_t(cfg.n), std::move(best->effects)),
                      best->iterations, std::move(restart_values)};
}

std::vector<std::pair<int, int>> linear_tight_pairs() {
  return {{3, 2}, {4, 2}, {4, 3}, {5, 4}, {6, 3}, {6, 5}, {7, 3}, {7, 4}, {7, 6},
          {8, 4}, {8, 7}, {9, 3}, {9, 6}, {9, 8}, {10, 5}, {10, 9}};
}

std::vector<TightnessEntry> verify_table2(int n_max, double tol, int restarts, std::uint64_t seed) {
  if (n_max < 3 || n_max > 10) {
    fail(ErrorCode::BadArgument, "n_max must lie in 3..10, got " + std::to_string(n_max));
  }
  std::vector<TightnessEntry> report;
  for (const auto &[n, d] : linear_tight_pairs()) {
    if (n > n_max) continue;
    SeesawConfig cfg;
    cfg.witness = WitnessKind::Linear;
    cfg.n = n;
    cfg.d = d;
    cfg.restarts = restarts;
    cfg.seed = seed;
    const SeesawResult result = optimize(cfg);
    const double bound = quantum_bound(WitnessKind::Linear, n, d);
    report.push_back({n, d, result.best_value, bound, bound - result.best_value <= tol, n <= 7});
  }
  return report;
}

}  // namespace dimwit
