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

#include <cmath>

#include "dimwit/error.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace dimwit;

namespace {

PairMeasurementSet uniform_effects(std::size_t n, std::size_t d, double p) {
  return PairMeasurementSet(n, std::vector<Effect>(pair_count(n), Effect(ComplexMatrix::identity(d) * Complex(p))));
}

}  // namespace

TEST(born_table, examples) {
  const std::vector<StateVector> states{test::basis_state(2, 0), test::basis_state(2, 1)};
  const Ensemble e(states);
  const PairMeasurementSet ms(2, {Effect(test::basis_density(2, 0).matrix())});
  const ProbabilityTable t = born_table(e, ms);
  EXPECT_NEAR(t(1, 1, 1), 1.0, 1e-15);
  EXPECT_NEAR(t(2, 1, 1), 0.0, 1e-15);
  EXPECT_NEAR(t(2, 1, 2), 1.0, 1e-15);

  const ProbabilityTable half = born_table(fourier_ensemble(4, 2), uniform_effects(4, 2, 0.5));
  for (double v : half.values()) EXPECT_NEAR(v, 0.5, 1e-15);

  const Ensemble f = fourier_ensemble(7, 2);
  EXPECT_NEAR(eval_quadratic(born_table(f, helstrom_measurements(f))), 12.25, 1e-6);
}

TEST(born_table, orthogonal_pair_probabilities) {
  const std::vector<StateVector> states{test::basis_state(2, 1), test::basis_state(2, 0)};
  const Ensemble e(states);  // x = 1 -> |1>, x = 2 -> |0>
  const PairMeasurementSet ms(2, {Effect(test::basis_density(2, 0).matrix())});
  const ProbabilityTable t = born_table(e, ms);
  EXPECT_NEAR(t(2, 1, 1), 1.0, 1e-15);
  EXPECT_NEAR(t(1, 1, 1), 0.0, 1e-15);
}

TEST(born_table, dimension_mismatch) {
  try {
    born_table(fourier_ensemble(3, 2), uniform_effects(3, 3, 0.5));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  EXPECT_THROW(born_table(fourier_ensemble(4, 2), uniform_effects(3, 2, 0.5)), Error);
}

TEST(noisy_table, examples) {
  const Ensemble e = fourier_ensemble(3, 2);
  const PairMeasurementSet ms = helstrom_measurements(e);
  EXPECT_NEAR(eval_quadratic(noisy_table(e, ms, {1.0, std::nullopt}, 7)), 0.0, 1e-15);
  EXPECT_EQ(noisy_table(e, ms, {}, 7).values(), born_table(e, ms).values());
  EXPECT_NEAR(eval_linear(noisy_table(e, ms, {0.1, std::nullopt}, 7)), 0.9 * 3.0 * std::sqrt(3.0) / 2.0, 1e-12);
}

TEST(noisy_table, shots_are_deterministic_per_seed) {
  const Ensemble e = fourier_ensemble(4, 2);
  const PairMeasurementSet ms = helstrom_measurements(e);
  const NoiseModel nm{0.2, 1000};
  EXPECT_EQ(noisy_table(e, ms, nm, 3).values(), noisy_table(e, ms, nm, 3).values());
  EXPECT_NE(noisy_table(e, ms, nm, 3).values(), noisy_table(e, ms, nm, 4).values());
  const ProbabilityTable sampled = noisy_table(e, ms, nm, 3);
  for (double v : sampled.values()) {
    EXPECT_NEAR(v * 1000.0, std::round(v * 1000.0), 1e-9);
  }
  EXPECT_THROW(noisy_table(e, ms, {0.0, 0}, 1), Error);
}

TEST(guessing_table, examples) {
  std::vector<StateVector> basis;
  std::vector<Effect> projectors;
  for (std::size_t k = 0; k < 4; ++k) {
    basis.push_back(test::basis_state(4, k));
    projectors.emplace_back(test::basis_density(4, k).matrix());
  }
  EXPECT_NEAR(eval_guessing(guessing_table(Ensemble(basis), projectors)), 1.0, 1e-15);

  const std::vector<Effect> flat(4, Effect(ComplexMatrix::identity(2) * Complex(0.25)));
  EXPECT_NEAR(eval_guessing(guessing_table(fourier_ensemble(4, 2), flat)), 0.25, 1e-15);

  const Ensemble f = fourier_ensemble(4, 2);
  EXPECT_LE(eval_guessing(guessing_table(f, square_root_measurement(f))), 0.5 + 1e-9);
}

TEST(guessing_table, not_a_povm) {
  const std::vector<Effect> short_of_identity(4, Effect(ComplexMatrix::identity(2) * Complex(0.2)));
  try {
    guessing_table(fourier_ensemble(4, 2), short_of_identity);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAPovm);
    EXPECT_NE(std::string(e.what()).find("0.2"), std::string::npos);
  }
}

TEST(properties, born_tables_respect_quantum_ceilings) {
  test::Gen gen(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = gen.integer(2, 6);
    const int d = gen.integer(1, n);
    std::vector<DensityMatrix> states;
    for (int x = 0; x < n; ++x) states.push_back(gen.any_state(std::size_t(d)));
    const Ensemble e(states);
    std::vector<Effect> effects;
    for (std::size_t y = 0; y < pair_count(std::size_t(n)); ++y) {
      effects.push_back(gen.povm(std::size_t(d), 2).front());
    }
    const ProbabilityTable random_t = born_table(e, PairMeasurementSet(std::size_t(n), effects));
    const ProbabilityTable helstrom_t = born_table(e, helstrom_measurements(e));
    for (const auto *t : {&random_t, &helstrom_t}) {
      EXPECT_LE(eval_quadratic(*t), quantum_bound(WitnessKind::Quadratic, n, d) + 1e-8);
      EXPECT_LE(eval_linear(*t), quantum_bound(WitnessKind::Linear, n, d) + 1e-8);
    }
    const ProbabilityTable g = guessing_table(e, gen.povm(std::size_t(d), std::size_t(n)));
    EXPECT_LE(eval_guessing(g), quantum_bound(WitnessKind::Guessing, n, d) + 1e-8);
  }
}

TEST(properties, depolarizing_scales_pair_differences) {
  test::Gen gen(42);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.integer(2, 6);
    const int d = gen.integer(2, 5);
    std::vector<DensityMatrix> states;
    for (int x = 0; x < n; ++x) states.push_back(gen.any_state(std::size_t(d)));
    const Ensemble e(states);
    const PairMeasurementSet ms = helstrom_measurements(e);
    const double eta = gen.uniform();
    const auto exact = pair_differences(born_table(e, ms));
    const auto noisy = pair_differences(noisy_table(e, ms, {eta, std::nullopt}, 0));
    for (std::size_t i = 0; i < exact.size(); ++i) EXPECT_NEAR(noisy[i], (1.0 - eta) * exact[i], 1e-10);
  }
}

TEST(properties, shot_frequencies_converge) {
  const Ensemble e = fourier_ensemble(7, 2);
  const PairMeasurementSet ms = helstrom_measurements(e);
  const ProbabilityTable sampled = noisy_table(e, ms, {0.0, 1'000'000}, 2024);
  EXPECT_NEAR(eval_quadratic(sampled), 12.25, 5e-3);
}
