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

#include "dimwit/quantum.hpp"

#include <cmath>
#include <numbers>

#include "dimwit/error.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

using namespace dimwit;

namespace {

ComplexMatrix scaled_identity(std::size_t d, double s) { return ComplexMatrix::identity(d) * Complex(s); }

StateVector overlap_state(double c) { return StateVector(ComplexVector{c, std::sqrt(1.0 - c * c)}); }

}  // namespace

TEST(types, state_vector_requires_unit_norm) {
  EXPECT_THROW(StateVector(ComplexVector{1.0, 1.0}), Error);
  EXPECT_NO_THROW(StateVector(ComplexVector{Complex(0.6, 0.0), Complex(0.0, 0.8)}));
}

TEST(types, density_matrix_invariants) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(2)), Error);  // trace 2
  const double neg[] = {1.5, -0.5};
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal(neg)), Error);
  try {
    DensityMatrix(ComplexMatrix(2, {0.5, 0.3, 0.0, 0.5}));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
}

TEST(types, effect_spectrum_in_unit_interval) {
  EXPECT_THROW(Effect(scaled_identity(2, 1.5)), Error);
  EXPECT_THROW(Effect(scaled_identity(2, -0.1)), Error);
  const Effect half(scaled_identity(2, 0.5));
  EXPECT_NEAR(half.complement().matrix()(0, 0).real(), 0.5, 1e-15);
}

TEST(types, ensemble_rejects_mixed_dims) {
  std::vector<StateVector> states{test::basis_state(2, 0), test::basis_state(3, 0)};
  EXPECT_THROW(Ensemble{std::move(states)}, Error);
}

TEST(pairs, index_roundtrip_and_order) {
  EXPECT_EQ(pair_index(2, 1), 0u);
  EXPECT_EQ(pair_index(3, 1), 1u);
  EXPECT_EQ(pair_index(3, 2), 2u);
  EXPECT_EQ(pair_index(4, 1), 3u);
  for (std::size_t i = 0; i < pair_count(10); ++i) {
    const auto [x, xp] = pair_at(i);
    EXPECT_GT(x, xp);
    EXPECT_EQ(pair_index(x, xp), i);
  }
}

TEST(trace_distance, examples) {
  const DensityMatrix rho = test::basis_density(2, 0);
  EXPECT_NEAR(trace_distance(rho, rho), 0.0, 1e-15);
  EXPECT_NEAR(trace_distance(rho, test::basis_density(2, 1)), 1.0, 1e-14);
  EXPECT_NEAR(trace_distance(DensityMatrix::from_pure(overlap_state(1.0)),
                             DensityMatrix::from_pure(overlap_state(0.5))),
              std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_THROW(trace_distance(rho, test::basis_density(3, 0)), Error);
}

TEST(fidelity_pure, examples) {
  const StateVector a = test::basis_state(3, 0);
  EXPECT_NEAR(fidelity_pure(a, a), 1.0, 1e-15);
  EXPECT_EQ(fidelity_pure(a, test::basis_state(3, 2)), 0.0);
  for (int d = 2; d <= 6; ++d) {
    const Ensemble e = fourier_ensemble(d + 1, d);
    for (std::size_t x = 1; x <= e.size(); ++x) {
      for (std::size_t xp = 1; xp < x; ++xp) {
        EXPECT_NEAR(fidelity_pure(*e.pure_state(x), *e.pure_state(xp)), 1.0 / d, 1e-12);
      }
    }
  }
  EXPECT_THROW(fidelity_pure(a, test::basis_state(2, 0)), Error);
}

TEST(helstrom_effect, examples) {
  const DensityMatrix zero = test::basis_density(2, 0);
  const DensityMatrix one = test::basis_density(2, 1);
  EXPECT_EQ(helstrom_effect(zero, zero).matrix().max_abs(), 0.0);
  const Effect m = helstrom_effect(zero, one);
  EXPECT_LE((m.matrix() - zero.matrix()).max_abs(), 1e-14);

  const DensityMatrix a = DensityMatrix::from_pure(overlap_state(1.0));
  const DensityMatrix b = DensityMatrix::from_pure(overlap_state(0.5));
  const double value = trace_of_product(a.matrix() - b.matrix(), helstrom_effect(a, b).matrix()).real();
  EXPECT_NEAR(value, trace_distance(a, b), 1e-12);
  EXPECT_NEAR(value, std::sqrt(3.0) / 2.0, 1e-8);
}

TEST(fourier_ensemble, amplitudes_follow_phase_convention) {
  const Ensemble e = fourier_ensemble(5, 3);
  for (std::size_t x = 1; x <= 5; ++x) {
    const auto amps = e.pure_state(x)->amplitudes();
    for (std::size_t k = 0; k < 3; ++k) {
      const Complex expected = std::polar(1.0 / std::sqrt(3.0), 2.0 * std::numbers::pi * double(k * x) / 5.0);
      EXPECT_NEAR(std::abs(amps[k] - expected), 0.0, 1e-14);
    }
  }
}

TEST(fourier_ensemble, examples) {
  const Ensemble full = fourier_ensemble(3, 3);
  for (std::size_t x = 1; x <= 3; ++x) {
    for (std::size_t xp = 1; xp < x; ++xp) {
      EXPECT_NEAR(fidelity_pure(*full.pure_state(x), *full.pure_state(xp)), 0.0, 1e-10);
    }
  }
  const Ensemble three = fourier_ensemble(3, 2);
  EXPECT_NEAR(fidelity_pure(*three.pure_state(2), *three.pure_state(1)), 0.5, 1e-12);
  EXPECT_LE((average_state(fourier_ensemble(7, 2)).matrix() - scaled_identity(2, 0.5)).max_abs(), 1e-10);
  EXPECT_THROW(fourier_ensemble(3, 4), Error);
  EXPECT_THROW(fourier_ensemble(3, 0), Error);
}

TEST(average_state, examples) {
  const std::vector<StateVector> one{test::basis_state(2, 1)};
  EXPECT_LE((average_state(Ensemble(one)).matrix() - test::basis_density(2, 1).matrix()).max_abs(), 0.0);
  const std::vector<StateVector> two{test::basis_state(2, 0), test::basis_state(2, 1)};
  EXPECT_LE((average_state(Ensemble(two)).matrix() - scaled_identity(2, 0.5)).max_abs(), 1e-15);
  EXPECT_LE((average_state(fourier_ensemble(5, 3)).matrix() - scaled_identity(3, 1.0 / 3.0)).max_abs(), 1e-10);
}

TEST(purity, examples) {
  EXPECT_NEAR(purity(test::basis_density(4, 2)), 1.0, 1e-15);
  EXPECT_NEAR(purity(DensityMatrix::maximally_mixed(5)), 0.2, 1e-15);
  EXPECT_NEAR(purity(average_state(fourier_ensemble(7, 4))), 0.25, 1e-9);
}

TEST(purity, fourier_average_state_meets_floor_exactly) {
  for (int n = 1; n <= 10; ++n) {
    for (int d = 1; d <= n; ++d) {
      EXPECT_NEAR(purity(average_state(fourier_ensemble(n, d))), 1.0 / d, 1e-9) << n << " " << d;
    }
  }
}

TEST(overlap_sum_identity_check, examples) {
  std::vector<StateVector> basis;
  for (std::size_t k = 0; k < 4; ++k) basis.push_back(test::basis_state(4, k));
  auto r = overlap_sum_identity_check(Ensemble(basis));
  EXPECT_NEAR(r.lhs, 0.0, 1e-15);
  EXPECT_NEAR(r.rhs, 0.0, 1e-12);

  std::vector<StateVector> same(5, test::basis_state(2, 0));
  r = overlap_sum_identity_check(Ensemble(same));
  EXPECT_NEAR(r.lhs, 10.0, 1e-12);
  EXPECT_NEAR(r.rhs, 12.5 - 2.5, 1e-12);

  // Direct geometric sums: |<Psi_x|Psi_x'>| = |sum_k e^{2 pi i k (x'-x)/N}| / d.
  const int n = 6, d = 3;
  double direct = 0.0;
  for (int x = 1; x <= n; ++x) {
    for (int xp = 1; xp < x; ++xp) {
      Complex s = 0.0;
      for (int k = 0; k < d; ++k) s += std::polar(1.0, 2.0 * std::numbers::pi * k * (xp - x) / n);
      direct += std::norm(s) / (d * d);
    }
  }
  r = overlap_sum_identity_check(fourier_ensemble(n, d));
  EXPECT_NEAR(r.lhs, direct, 1e-12);
  EXPECT_NEAR(r.lhs, r.rhs, 1e-8);
}

TEST(overlap_sum_identity_check, requires_pure_states) {
  std::vector<DensityMatrix> mixed{DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(2)};
  try {
    overlap_sum_identity_check(Ensemble(mixed));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPure);
  }
}

TEST(properties, trace_distance_metric_axioms) {
  test::Gen gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = std::size_t(gen.integer(2, 6));
    const DensityMatrix a = gen.any_state(d), b = gen.any_state(d), c = gen.any_state(d);
    const double ab = trace_distance(a, b);
    EXPECT_EQ(ab, trace_distance(b, a));
    EXPECT_LE(ab, trace_distance(a, c) + trace_distance(c, b) + 1e-8);
    EXPECT_LE(trace_distance(a, a), 1e-10);
    EXPECT_LE(ab, 1.0 + 1e-9);
  }
}

TEST(properties, fidelity_sandwich_and_pure_saturation) {
  test::Gen gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = std::size_t(gen.integer(2, 8));
    const StateVector psi = gen.pure_state(d), phi = gen.pure_state(d);
    const double f = fidelity_pure(psi, phi);
    const double dist = trace_distance(DensityMatrix::from_pure(psi), DensityMatrix::from_pure(phi));
    EXPECT_LE(1.0 - f, dist + 1e-8);
    EXPECT_LE(dist, std::sqrt(1.0 - f * f) + 1e-8);
    EXPECT_NEAR(dist, std::sqrt(1.0 - f * f), 1e-8);
  }
}

TEST(properties, helstrom_attains_and_beats_probe_projectors) {
  test::Gen gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = std::size_t(gen.integer(2, 6));
    const DensityMatrix rho = gen.any_state(d), sigma = gen.any_state(d);
    const ComplexMatrix diff = rho.matrix() - sigma.matrix();
    const double attained = trace_of_product(diff, helstrom_effect(rho, sigma).matrix()).real();
    EXPECT_NEAR(attained, trace_distance(rho, sigma), 1e-8);
    for (int probe = 0; probe < 10; ++probe) {
      EXPECT_LE(trace_of_product(diff, gen.random_projector(d)).real(), attained + 1e-8);
    }
  }
}

TEST(properties, overlap_identity_on_random_pure_ensembles) {
  test::Gen gen(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = std::size_t(gen.integer(1, 6));
    const std::size_t n = std::size_t(gen.integer(1, 9));
    std::vector<StateVector> states;
    for (std::size_t x = 0; x < n; ++x) states.push_back(gen.pure_state(d));
    const Ensemble e(states);
    const auto r = overlap_sum_identity_check(e);
    EXPECT_NEAR(r.lhs, r.rhs, 1e-8);
    EXPECT_GE(purity(average_state(e)), 1.0 / double(d) - 1e-9);
  }
}

TEST(square_root_measurement, is_a_povm_on_a_rank_deficient_ensemble) {
  std::vector<StateVector> states{test::basis_state(3, 0), test::basis_state(3, 1)};
  const auto effects = square_root_measurement(Ensemble(states));
  ComplexMatrix total(3);
  for (const auto &e : effects) total += e.matrix();
  EXPECT_LE((total - ComplexMatrix::identity(3)).max_abs(), 1e-12);
}

TEST(depolarize, mixes_towards_identity) {
  const DensityMatrix rho = test::basis_density(2, 0);
  EXPECT_LE((depolarize(rho, 1.0).matrix() - scaled_identity(2, 0.5)).max_abs(), 1e-15);
  EXPECT_LE((depolarize(rho, 0.0).matrix() - rho.matrix()).max_abs(), 0.0);
  EXPECT_THROW(depolarize(rho, 1.5), Error);
}
