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

#ifndef DIMWIT_QUANTUM_HPP
#define DIMWIT_QUANTUM_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dimwit/linalg.hpp"

namespace dimwit {

/// Normalized pure state in C^d.
class StateVector {
 public:
  explicit StateVector(ComplexVector amplitudes, const Tolerances &tol = default_tolerances());

  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

 private:
  ComplexVector amplitudes_;
};

/// Unit-trace positive semidefinite operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix, const Tolerances &tol = default_tolerances());
  static DensityMatrix from_pure(const StateVector &psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix &matrix() const { return matrix_; }

 private:
  struct Unchecked {};
  DensityMatrix(ComplexMatrix matrix, Unchecked) : matrix_(std::move(matrix)) {}

  ComplexMatrix matrix_;
};

/// POVM element: Hermitian with spectrum in [0, 1].
class Effect {
 public:
  explicit Effect(ComplexMatrix matrix, const Tolerances &tol = default_tolerances());
  static Effect zero(std::size_t dim);

  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix &matrix() const { return matrix_; }
  /// Identity minus this effect (the b = 2 outcome of a binary measurement).
  Effect complement() const;

 private:
  struct Unchecked {};
  Effect(ComplexMatrix matrix, Unchecked) : matrix_(std::move(matrix)) {}

  ComplexMatrix matrix_;
};

/// N preparations on C^d. Pure members keep their state vector.
class Ensemble {
 public:
  explicit Ensemble(std::vector<DensityMatrix> states);
  explicit Ensemble(std::vector<StateVector> states);

  std::size_t dim() const { return states_.front().dim(); }
  std::size_t size() const { return states_.size(); }
  /// 1-based preparation index x.
  const DensityMatrix &state(std::size_t x) const { return states_.at(x - 1); }
  const std::optional<StateVector> &pure_state(std::size_t x) const { return pure_.at(x - 1); }
  bool all_pure() const;
  std::span<const DensityMatrix> states() const { return states_; }

 private:
  std::vector<DensityMatrix> states_;
  std::vector<std::optional<StateVector>> pure_;
};

/// Number of binary measurements y = (x, x') with x > x'.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Position of pair (x, x'), x > x' >= 1, in the order (2,1), (3,1), (3,2), (4,1), ...
constexpr std::size_t pair_index(std::size_t x, std::size_t x_prime) {
  return (x - 1) * (x - 2) / 2 + (x_prime - 1);
}

/// Inverse of pair_index.
std::pair<std::size_t, std::size_t> pair_at(std::size_t index);

/// Binary measurements indexed by pairs (x, x'); only the b = 1 effect is stored.
class PairMeasurementSet {
 public:
  PairMeasurementSet(std::size_t n, std::vector<Effect> effects);

  std::size_t dim() const { return effects_.front().dim(); }
  std::size_t preparations() const { return n_; }
  const Effect &effect(std::size_t x, std::size_t x_prime) const;
  std::span<const Effect> effects() const { return effects_; }

 private:
  std::size_t n_;
  std::vector<Effect> effects_;
};

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma,
                      const Tolerances &tol = default_tolerances());

/// |<psi|phi>|
double fidelity_pure(const StateVector &psi, const StateVector &phi);

/// Projector onto the positive eigenspace of rho - sigma; attains the trace
/// distance as tr((rho - sigma) M).
Effect helstrom_effect(const DensityMatrix &rho, const DensityMatrix &sigma,
                       const Tolerances &tol = default_tolerances());

/// Helstrom effect for every pair (x, x') of the ensemble.
PairMeasurementSet helstrom_measurements(const Ensemble &ensemble,
                                         const Tolerances &tol = default_tolerances());

/// <k|Psi_x> = exp(2 pi i k x / N) / sqrt(d), k = 0..d-1, x = 1..N.
Ensemble fourier_ensemble(int n, int d);

DensityMatrix average_state(const Ensemble &ensemble);

/// tr(rho^2)
double purity(const DensityMatrix &rho);

struct OverlapIdentity {
  double lhs;  // sum_{x > x'} |<Psi_x|Psi_x'>|^2
  double rhs;  // (N^2 / 2) tr(Omega^2) - N / 2
};

/// Both sides of the overlap-sum / purity identity for a pure ensemble.
OverlapIdentity overlap_sum_identity_check(const Ensemble &ensemble);

/// Square-root measurement E_x = Omega^{-1/2} (rho_x / N) Omega^{-1/2}, with
/// the pseudo-inverse on the support of Omega. The kernel of Omega is added to
/// the first effect so the effects always sum to the identity.
std::vector<Effect> square_root_measurement(const Ensemble &ensemble,
                                            const Tolerances &tol = default_tolerances());

/// (1 - eta) rho + eta I / d
DensityMatrix depolarize(const DensityMatrix &rho, double eta);

}  // namespace dimwit

#endif  // DIMWIT_QUANTUM_HPP
