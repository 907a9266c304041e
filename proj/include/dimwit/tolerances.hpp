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

#ifndef DIMWIT_TOLERANCES_HPP
#define DIMWIT_TOLERANCES_HPP

namespace dimwit {

/// Every numerical threshold used by the library. Operations take a
/// `const Tolerances &` defaulting to these values so tests can tighten or
/// loosen them in one place.
struct Tolerances {
  double hermitian = 1e-10;          // max |A_ij - conj(A_ji)|
  double jacobi_off_diagonal = 1e-12;  // stop when off-diagonal Frobenius norm is below
  int jacobi_max_sweeps = 100;
  double zero_eigenvalue = 1e-10;    // |lambda| at or below counts as zero
  double state_norm = 1e-10;         // pure state l2 norm
  double density_trace = 1e-9;
  double density_negativity = 1e-9;  // eigenvalues >= -this
  double effect_range = 1e-9;        // eigenvalues in [-this, 1 + this]
  double povm_completeness = 1e-8;
  double probability_range = 1e-9;
  double probability_sum = 1e-8;
  double analytic_slack = 1e-9;      // comparisons against closed-form bounds
  double numeric_slack = 1e-6;       // comparisons against enumerated/numerical bounds
  double monotonicity = 1e-9;        // see-saw half-step decrease allowance
};

inline const Tolerances &default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace dimwit

#endif  // DIMWIT_TOLERANCES_HPP
