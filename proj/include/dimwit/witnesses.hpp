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

#ifndef DIMWIT_WITNESSES_HPP
#define DIMWIT_WITNESSES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimwit/tolerances.hpp"

namespace dimwit {

enum class WitnessKind {
  Guessing,   // U_N: one measurement with N outcomes
  Quadratic,  // W_N: N(N-1)/2 binary measurements, squared differences
  Linear,     // V_N: N(N-1)/2 binary measurements, plain differences
};

std::string_view witness_name(WitnessKind kind);
/// Accepts "guessing", "quadratic", "linear".
WitnessKind parse_witness(std::string_view name);

/// (m, k) a table must have for the given kind and N.
struct TableShape {
  std::size_t measurements;
  std::size_t outcomes;
};
TableShape shape_for(WitnessKind kind, std::size_t n);

/// P(b|x,y) for x = 1..N, y = 1..m, b = 1..k.
class ProbabilityTable {
 public:
  ProbabilityTable(std::size_t n, std::size_t m, std::size_t k, std::vector<double> p,
                   const Tolerances &tol = default_tolerances());

  std::size_t preparations() const { return n_; }
  std::size_t measurements() const { return m_; }
  std::size_t outcomes() const { return k_; }
  /// 1-based indices.
  double operator()(std::size_t x, std::size_t y, std::size_t b) const {
    return p_[((x - 1) * m_ + (y - 1)) * k_ + (b - 1)];
  }
  const std::vector<double> &values() const { return p_; }
  bool has_shape(WitnessKind kind) const;

 private:
  std::size_t n_, m_, k_;
  std::vector<double> p_;
};

/// P(1|x,(x,x')) - P(1|x',(x,x')) for every pair, in pair order.
std::vector<double> pair_differences(const ProbabilityTable &t);

double eval_guessing(const ProbabilityTable &t);
double eval_quadratic(const ProbabilityTable &t);
double eval_linear(const ProbabilityTable &t);
double evaluate(WitnessKind kind, const ProbabilityTable &t);

/// Q_d: maximum over d-dimensional quantum models.
double quantum_bound(WitnessKind kind, int n, int d);

/// C_d in closed form where one is known; empty for LINEAR away from d = N-1.
std::optional<double> classical_bound(WitnessKind kind, int n, int d);

struct BoundReport {
  WitnessKind kind;
  int n;
  int d;
  double quantum_bound;
  std::optional<double> classical_bound;
  bool classical_bound_exact;  // true when classical_bound comes from a closed form
};

/// Closed-form bounds, falling back to classical enumeration when
/// `enumerate_missing` is set and no formula exists.
BoundReport bound_report(WitnessKind kind, int n, int d, bool enumerate_missing = false);

struct Certification {
  int min_quantum_dim;
  std::optional<int> min_classical_dim;
};

/// Smallest d whose quantum (classical) bound admits `value`.
Certification certify_dimension(WitnessKind kind, int n, double value,
                                const Tolerances &tol = default_tolerances());

}  // namespace dimwit

#endif  // DIMWIT_WITNESSES_HPP
