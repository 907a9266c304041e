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

#include "dimwit/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dimwit/classical.hpp"
#include "dimwit/error.hpp"
#include "dimwit/quantum.hpp"

namespace dimwit {

std::string_view witness_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Guessing: return "guessing";
    case WitnessKind::Quadratic: return "quadratic";
    case WitnessKind::Linear: return "linear";
  }
  return "unknown";
}

WitnessKind parse_witness(std::string_view name) {
  if (name == "guessing") return WitnessKind::Guessing;
  if (name == "quadratic") return WitnessKind::Quadratic;
  if (name == "linear") return WitnessKind::Linear;
  fail(ErrorCode::BadArgument, "unknown witness '" + std::string(name) +
                                   "' (expected guessing, quadratic or linear)");
}

TableShape shape_for(WitnessKind kind, std::size_t n) {
  if (kind == WitnessKind::Guessing) return {1, n};
  return {pair_count(n), 2};
}

ProbabilityTable::ProbabilityTable(std::size_t n, std::size_t m, std::size_t k,
                                   std::vector<double> p, const Tolerances &tol)
    : n_(n), m_(m), k_(k), p_(std::move(p)) {
  if (n == 0 || m == 0 || k == 0) fail(ErrorCode::BadArgument, "table dimensions must be positive");
  if (p_.size() != n * m * k) {
    fail(ErrorCode::ShapeMismatch, "table needs " + std::to_string(n * m * k) + " entries, got " +
                                       std::to_string(p_.size()));
  }
  for (std::size_t x = 1; x <= n; ++x) {
    for (std::size_t y = 1; y <= m; ++y) {
      double sum = 0.0;
      for (std::size_t b = 1; b <= k; ++b) {
        const double v = (*this)(x, y, b);
        if (!(v >= -tol.probability_range && v <= 1.0 + tol.probability_range)) {
          fail(ErrorCode::BadArgument, "P(" + std::to_string(b) + "|" + std::to_string(x) + "," +
                                           std::to_string(y) + ") = " + std::to_string(v) +
                                           " is not a probability");
        }
        sum += v;
      }
      if (!(std::abs(sum - 1.0) <= tol.probability_sum)) {
        fail(ErrorCode::BadArgument, "P(.|" + std::to_string(x) + "," + std::to_string(y) +
                                         ") sums to " + std::to_string(sum));
      }
    }
  }
}

bool ProbabilityTable::has_shape(WitnessKind kind) const {
  const TableShape s = shape_for(kind, n_);
  return m_ == s.measurements && k_ == s.outcomes;
}

namespace {

void require_shape(WitnessKind kind, const ProbabilityTable &t) {
  if (!t.has_shape(kind)) {
    const TableShape s = shape_for(kind, t.preparations());
    fail(ErrorCode::ShapeMismatch,
         std::string(witness_name(kind)) + " witness with N=" + std::to_string(t.preparations()) +
             " needs m=" + std::to_string(s.measurements) + " k=" + std::to_string(s.outcomes) +
             ", table has m=" + std::to_string(t.measurements()) +
             " k=" + std::to_string(t.outcomes()));
  }
}

void require_bound_args(int n, int d) {
  if (n < 2 || d < 1) {
    fail(ErrorCode::BadArgument,
         "bounds need N >= 2 and d >= 1, got N=" + std::to_string(n) + " d=" + std::to_string(d));
  }
}

}  // namespace

std::vector<double> pair_differences(const ProbabilityTable &t) {
  require_shape(WitnessKind::Quadratic, t);
  std::vector<double> diffs(t.measurements());
  for (std::size_t y = 1; y <= t.measurements(); ++y) {
    const auto [x, x_prime] = pair_at(y - 1);
    diffs[y - 1] = t(x, y, 1) - t(x_prime, y, 1);
  }
  return diffs;
}

double eval_guessing(const ProbabilityTable &t) {
  require_shape(WitnessKind::Guessing, t);
  double s = 0.0;
  for (std::size_t x = 1; x <= t.preparations(); ++x) s += t(x, 1, x);
  return s / double(t.preparations());
}

double eval_quadratic(const ProbabilityTable &t) {
  double s = 0.0;
  for (double diff : pair_differences(t)) s += diff * diff;
  return s;
}

double eval_linear(const ProbabilityTable &t) {
  double s = 0.0;
  for (double diff : pair_differences(t)) s += diff;
  return s;
}

double evaluate(WitnessKind kind, const ProbabilityTable &t) {
  switch (kind) {
    case WitnessKind::Guessing: return eval_guessing(t);
    case WitnessKind::Quadratic: return eval_quadratic(t);
    case WitnessKind::Linear: return eval_linear(t);
  }
  fail(ErrorCode::BadArgument, "unknown witness kind");
}

double quantum_bound(WitnessKind kind, int n, int d) {
  require_bound_args(n, d);
  const double nn = double(n);
  const double eff = double(std::min(d, n));
  switch (kind) {
    case WitnessKind::Guessing: return eff / nn;
    case WitnessKind::Quadratic: return 0.5 * nn * nn * (1.0 - 1.0 / eff);
    case WitnessKind::Linear:
      return 0.5 * nn * std::sqrt(nn * (nn - 1.0)) * std::sqrt(1.0 - 1.0 / eff);
  }
  fail(ErrorCode::BadArgument, "unknown witness kind");
}

std::optional<double> classical_bound(WitnessKind kind, int n, int d) {
  require_bound_args(n, d);
  switch (kind) {
    case WitnessKind::Guessing: return double(std::min(d, n)) / double(n);
    case WitnessKind::Quadratic: return balanced_partition_value(n, d);
    case WitnessKind::Linear:
      if (d == n - 1) return 0.5 * double(d) * double(d + 1) - 1.0;
      return std::nullopt;
  }
  fail(ErrorCode::BadArgument, "unknown witness kind");
}

namespace {

bool enumeration_fits(int n, int d) {
  return canonical_encoding_count(n, d) <= double(kEnumerationLimit);
}

}  // namespace

BoundReport bound_report(WitnessKind kind, int n, int d, bool enumerate_missing) {
  BoundReport r{kind, n, d, quantum_bound(kind, n, d), classical_bound(kind, n, d), true};
  if (!r.classical_bound) {
    r.classical_bound_exact = false;
    if (enumerate_missing && enumeration_fits(n, d)) r.classical_bound = enumerate_max(kind, n, d).value;
  }
  return r;
}

Certification certify_dimension(WitnessKind kind, int n, double value, const Tolerances &tol) {
  require_bound_args(n, 1);
  const double ceiling = quantum_bound(kind, n, n);
  if (value > ceiling + tol.numeric_slack) {
    fail(ErrorCode::OutOfRange, "witness value " + std::to_string(value) +
                                    " exceeds the maximum " + std::to_string(ceiling));
  }

  Certification out{n, std::nullopt};
  for (int d = 1; d <= n; ++d) {
    if (quantum_bound(kind, n, d) >= value - tol.analytic_slack) {
      out.min_quantum_dim = d;
      break;
    }
  }

  for (int d = 1; d <= n; ++d) {
    std::optional<double> bound = classical_bound(kind, n, d);
    double slack = tol.analytic_slack;
    if (!bound) {
      if (!enumeration_fits(n, d)) return out;
      bound = enumerate_max(kind, n, d).value;
      slack = tol.numeric_slack;
    }
    if (*bound >= value - slack) {
      out.min_classical_dim = d;
      return out;
    }
  }
  // Only reachable inside the slack band above the d = N ceiling.
  out.min_classical_dim = n;
  return out;
}

}  // namespace dimwit
