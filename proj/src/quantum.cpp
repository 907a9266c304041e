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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dimwit/error.hpp"

namespace dimwit {

StateVector::StateVector(ComplexVector amplitudes, const Tolerances &tol)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) fail(ErrorCode::BadArgument, "state vector must have dim >= 1");
  const double norm = vector_norm(amplitudes_);
  if (!(std::abs(norm - 1.0) <= tol.state_norm)) {
    fail(ErrorCode::InvalidState, "state vector norm is " + std::to_string(norm) + ", expected 1");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, const Tolerances &tol)
    : matrix_(std::move(matrix)) {
  if (matrix_.dim() == 0) fail(ErrorCode::BadArgument, "density matrix must have dim >= 1");
  require_hermitian(matrix_, tol);
  const double tr = matrix_.trace().real();
  if (!(std::abs(tr - 1.0) <= tol.density_trace)) {
    fail(ErrorCode::InvalidState, "density matrix trace is " + std::to_string(tr));
  }
  const double smallest = eig_hermitian(matrix_, tol).eigenvalues.back();
  if (smallest < -tol.density_negativity) {
    fail(ErrorCode::InvalidState,
         "density matrix has negative eigenvalue " + std::to_string(smallest));
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
  return DensityMatrix(ComplexMatrix::projector(psi.amplitudes()), Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(ComplexMatrix::identity(dim) * Complex(1.0 / double(dim)), Unchecked{});
}

Effect::Effect(ComplexMatrix matrix, const Tolerances &tol) : matrix_(std::move(matrix)) {
  if (matrix_.dim() == 0) fail(ErrorCode::BadArgument, "effect must have dim >= 1");
  require_hermitian(matrix_, tol);
  const auto eig = eig_hermitian(matrix_, tol);
  if (eig.eigenvalues.back() < -tol.effect_range || eig.eigenvalues.front() > 1.0 + tol.effect_range) {
    fail(ErrorCode::InvalidState, "effect spectrum [" + std::to_string(eig.eigenvalues.back()) +
                                      ", " + std::to_string(eig.eigenvalues.front()) +
                                      "] outside [0, 1]");
  }
}

Effect Effect::zero(std::size_t dim) { return Effect(ComplexMatrix(dim), Unchecked{}); }

Effect Effect::complement() const {
  return Effect(ComplexMatrix::identity(dim()) - matrix_, Unchecked{});
}

Ensemble::Ensemble(std::vector<DensityMatrix> states)
    : states_(std::move(states)), pure_(states_.size()) {
  if (states_.empty()) fail(ErrorCode::BadArgument, "ensemble must contain at least one state");
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].dim() != states_.front().dim()) {
      fail(ErrorCode::DimensionMismatch, "ensemble state " + std::to_string(i + 1) +
                                             " has dim " + std::to_string(states_[i].dim()));
    }
  }
}

Ensemble::Ensemble(std::vector<StateVector> states) {
  if (states.empty()) fail(ErrorCode::BadArgument, "ensemble must contain at least one state");
  const std::size_t dim = states.front().dim();
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != dim) {
      fail(ErrorCode::DimensionMismatch, "ensemble state " + std::to_string(i + 1) +
                                             " has dim " + std::to_string(states[i].dim()));
    }
    states_.push_back(DensityMatrix::from_pure(states[i]));
    pure_.emplace_back(std::move(states[i]));
  }
}

bool Ensemble::all_pure() const {
  for (const auto &p : pure_) {
    if (!p) return false;
  }
  return true;
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t index) {
  std::size_t x = 2;
  while (pair_count(x) <= index) ++x;
  return {x, index - pair_count(x - 1) + 1};
}

PairMeasurementSet::PairMeasurementSet(std::size_t n, std::vector<Effect> effects)
    : n_(n), effects_(std::move(effects)) {
  if (n < 2) fail(ErrorCode::BadArgument, "pair measurements need N >= 2");
  if (effects_.size() != pair_count(n)) {
    fail(ErrorCode::ShapeMismatch, "expected " + std::to_string(pair_count(n)) +
                                       " pair effects, got " + std::to_string(effects_.size()));
  }
  for (const auto &e : effects_) {
    if (e.dim() != effects_.front().dim()) fail(ErrorCode::DimensionMismatch, "pair effects differ in dim");
  }
}

const Effect &PairMeasurementSet::effect(std::size_t x, std::size_t x_prime) const {
  if (!(x > x_prime && x_prime >= 1 && x <= n_)) {
    fail(ErrorCode::BadArgument,
         "no pair (" + std::to_string(x) + "," + std::to_string(x_prime) + ")");
  }
  return effects_[pair_index(x, x_prime)];
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma, const Tolerances &tol) {
  if (rho.dim() != sigma.dim()) fail(ErrorCode::DimensionMismatch, "trace distance of unequal dims");
  // Canonical argument order makes D(rho, sigma) == D(sigma, rho) bit for bit.
  const auto key = [](const Complex &z) { return std::pair(z.real(), z.imag()); };
  const auto a = rho.matrix().entries();
  const auto b = sigma.matrix().entries();
  const bool swap = std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end(),
                                                 [&](const Complex &u, const Complex &v) {
                                                   return key(u) < key(v);
                                                 });
  const ComplexMatrix diff = swap ? sigma.matrix() - rho.matrix() : rho.matrix() - sigma.matrix();
  return 0.5 * trace_norm(diff, tol);
}

double fidelity_pure(const StateVector &psi, const StateVector &phi) {
  if (psi.dim() != phi.dim()) fail(ErrorCode::DimensionMismatch, "fidelity of unequal dims");
  return std::abs(inner_product(psi.amplitudes(), phi.amplitudes()));
}

Effect helstrom_effect(const DensityMatrix &rho, const DensityMatrix &sigma, const Tolerances &tol) {
  if (rho.dim() != sigma.dim()) fail(ErrorCode::DimensionMismatch, "Helstrom effect of unequal dims");
  return Effect(positive_part_projector(rho.matrix() - sigma.matrix(), tol), tol);
}

PairMeasurementSet helstrom_measurements(const Ensemble &ensemble, const Tolerances &tol) {
  const std::size_t n = ensemble.size();
  std::vector<Effect> effects;
  effects.reserve(pair_count(n));
  for (std::size_t i = 0; i < pair_count(n); ++i) {
    const auto [x, x_prime] = pair_at(i);
    effects.push_back(helstrom_effect(ensemble.state(x), ensemble.state(x_prime), tol));
  }
  return PairMeasurementSet(n, std::move(effects));
}

Ensemble fourier_ensemble(int n, int d) {
  if (d < 1 || d > n) {
    fail(ErrorCode::BadArgument, "Fourier ensemble needs 1 <= d <= N, got N=" + std::to_string(n) +
                                     " d=" + std::to_string(d));
  }
  const double amplitude = 1.0 / std::sqrt(double(d));
  std::vector<StateVector> states;
  states.reserve(std::size_t(n));
  for (int x = 1; x <= n; ++x) {
    ComplexVector psi(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      const double angle = 2.0 * std::numbers::pi * double((k * x) % n) / double(n);
      psi[std::size_t(k)] = std::polar(amplitude, angle);
    }
    states.emplace_back(std::move(psi));
  }
  return Ensemble(std::move(states));
}

DensityMatrix average_state(const Ensemble &ensemble) {
  ComplexMatrix omega(ensemble.dim());
  for (const auto &rho : ensemble.states()) omega += rho.matrix();
  omega *= 1.0 / double(ensemble.size());
  return DensityMatrix(std::move(omega));
}

double purity(const DensityMatrix &rho) {
  return trace_of_product(rho.matrix(), rho.matrix()).real();
}

OverlapIdentity overlap_sum_identity_check(const Ensemble &ensemble) {
  const std::size_t n = ensemble.size();
  double lhs = 0.0;
  for (std::size_t x = 1; x <= n; ++x) {
    const auto &psi = ensemble.pure_state(x);
    if (!psi) fail(ErrorCode::NotPure, "state " + std::to_string(x) + " has no pure representation");
    for (std::size_t x_prime = 1; x_prime < x; ++x_prime) {
      const double f = fidelity_pure(*psi, *ensemble.pure_state(x_prime));
      lhs += f * f;
    }
  }
  const double nn = double(n);
  const double rhs = 0.5 * nn * nn * purity(average_state(ensemble)) - 0.5 * nn;
  return {lhs, rhs};
}

std::vector<Effect> square_root_measurement(const Ensemble &ensemble, const Tolerances &tol) {
  const std::size_t d = ensemble.dim();
  const double n = double(ensemble.size());
  const ComplexMatrix omega = average_state(ensemble).matrix();
  const EigenDecomposition eig = eig_hermitian(omega, tol);
  ComplexMatrix inv_sqrt(d);
  ComplexMatrix kernel(d);
  for (std::size_t i = 0; i < d; ++i) {
    const ComplexMatrix proj = ComplexMatrix::projector(eig.eigenvectors[i]);
    if (eig.eigenvalues[i] > tol.zero_eigenvalue) {
      inv_sqrt += proj * Complex(1.0 / std::sqrt(eig.eigenvalues[i]));
    } else {
      kernel += proj;
    }
  }
  std::vector<Effect> effects;
  effects.reserve(ensemble.size());
  for (std::size_t x = 1; x <= ensemble.size(); ++x) {
    ComplexMatrix e = inv_sqrt * ensemble.state(x).matrix() * inv_sqrt;
    e *= 1.0 / n;
    if (x == 1) e += kernel;
    effects.emplace_back(std::move(e), tol);
  }
  return effects;
}

DensityMatrix depolarize(const DensityMatrix &rho, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    fail(ErrorCode::BadArgument, "depolarizing parameter must lie in [0, 1], got " + std::to_string(eta));
  }
  ComplexMatrix m = rho.matrix() * Complex(1.0 - eta);
  m += ComplexMatrix::identity(rho.dim()) * Complex(eta / double(rho.dim()));
  return DensityMatrix(std::move(m));
}

}  // namespace dimwit
