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

#include "dimwit/dimwit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "dimwit/classical.hpp"
#include "dimwit/error.hpp"
#include "dimwit/io.hpp"
#include "dimwit/quantum.hpp"
#include "dimwit/seesaw.hpp"
#include "dimwit/simulate.hpp"
#include "dimwit/witnesses.hpp"

struct dw_ensemble {
  dimwit::Ensemble value;
};

struct dw_measurements {
  dimwit::PairMeasurementSet value;
};

struct dw_table {
  dimwit::WitnessKind witness;
  dimwit::ProbabilityTable value;
};

struct dw_seesaw_result {
  dimwit::SeesawConfig config;
  dimwit::SeesawResult value;
};

namespace {

thread_local std::string last_error;

dw_status to_status(dimwit::ErrorCode code) {
  using dimwit::ErrorCode;
  switch (code) {
    case ErrorCode::BadArgument: return DW_ERR_BAD_ARGUMENT;
    case ErrorCode::NotHermitian: return DW_ERR_NOT_HERMITIAN;
    case ErrorCode::DimensionMismatch: return DW_ERR_DIMENSION_MISMATCH;
    case ErrorCode::ShapeMismatch: return DW_ERR_SHAPE_MISMATCH;
    case ErrorCode::NotPure: return DW_ERR_NOT_PURE;
    case ErrorCode::NotAPovm: return DW_ERR_NOT_A_POVM;
    case ErrorCode::InvalidState: return DW_ERR_INVALID_STATE;
    case ErrorCode::OutOfRange: return DW_ERR_OUT_OF_RANGE;
    case ErrorCode::TooLarge: return DW_ERR_TOO_LARGE;
    case ErrorCode::IncompleteDecoding: return DW_ERR_INCOMPLETE_DECODING;
    case ErrorCode::NonMonotonic: return DW_ERR_NON_MONOTONIC;
    case ErrorCode::NoConvergence: return DW_ERR_NO_CONVERGENCE;
    case ErrorCode::Io: return DW_ERR_IO;
    case ErrorCode::Parse: return DW_ERR_PARSE;
  }
  return DW_ERR_INTERNAL;
}

dw_status set_error(dw_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `f`, translating exceptions into status codes.
template <class F>
dw_status guarded(F &&f) {
  try {
    f();
    return DW_OK;
  } catch (const dimwit::Error &e) {
    return set_error(to_status(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return set_error(DW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return set_error(DW_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(DW_ERR_INTERNAL, "unknown error");
  }
}

char *copy_string(const std::string &text) {
  char *out = static_cast<char *>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void require(bool ok, const char *what) {
  if (!ok) dimwit::fail(dimwit::ErrorCode::BadArgument, what);
}

dimwit::WitnessKind kind_of(dw_witness witness) {
  switch (witness) {
    case DW_WITNESS_GUESSING: return dimwit::WitnessKind::Guessing;
    case DW_WITNESS_QUADRATIC: return dimwit::WitnessKind::Quadratic;
    case DW_WITNESS_LINEAR: return dimwit::WitnessKind::Linear;
  }
  dimwit::fail(dimwit::ErrorCode::BadArgument, "unknown witness value " + std::to_string(int(witness)));
}

dw_witness witness_of(dimwit::WitnessKind kind) {
  switch (kind) {
    case dimwit::WitnessKind::Guessing: return DW_WITNESS_GUESSING;
    case dimwit::WitnessKind::Quadratic: return DW_WITNESS_QUADRATIC;
    case dimwit::WitnessKind::Linear: return DW_WITNESS_LINEAR;
  }
  return DW_WITNESS_GUESSING;
}

dimwit::SeesawConfig config_of(const dw_seesaw_config &c) {
  dimwit::SeesawConfig cfg;
  cfg.witness = kind_of(c.witness);
  cfg.n = c.n;
  cfg.d = c.d;
  cfg.restarts = c.restarts;
  cfg.max_iters = c.max_iters;
  cfg.improvement_tol = c.improvement_tol;
  cfg.seed = c.seed;
  return cfg;
}

}  // namespace

extern "C" {

const char *dw_version(void) { return "1.0.0"; }

void dw_string_free(char *text) { std::free(text); }

const char *dw_status_name(dw_status status) {
  switch (status) {
    case DW_OK: return "OK";
    case DW_ERR_BAD_ARGUMENT: return "BAD_ARGUMENT";
    case DW_ERR_NOT_HERMITIAN: return "NOT_HERMITIAN";
    case DW_ERR_DIMENSION_MISMATCH: return "DIMENSION_MISMATCH";
    case DW_ERR_SHAPE_MISMATCH: return "SHAPE_MISMATCH";
    case DW_ERR_NOT_PURE: return "NOT_PURE";
    case DW_ERR_NOT_A_POVM: return "NOT_A_POVM";
    case DW_ERR_INVALID_STATE: return "INVALID_STATE";
    case DW_ERR_OUT_OF_RANGE: return "OUT_OF_RANGE";
    case DW_ERR_TOO_LARGE: return "TOO_LARGE";
    case DW_ERR_INCOMPLETE_DECODING: return "INCOMPLETE_DECODING";
    case DW_ERR_NON_MONOTONIC: return "NON_MONOTONIC";
    case DW_ERR_NO_CONVERGENCE: return "NO_CONVERGENCE";
    case DW_ERR_IO: return "IO";
    case DW_ERR_PARSE: return "PARSE";
    case DW_ERR_INTERNAL: return "INTERNAL";
  }
  return "UNKNOWN";
}

const char *dw_last_error_message(void) { return last_error.c_str(); }

const char *dw_witness_name(dw_witness witness) {
  switch (witness) {
    case DW_WITNESS_GUESSING: return "guessing";
    case DW_WITNESS_QUADRATIC: return "quadratic";
    case DW_WITNESS_LINEAR: return "linear";
  }
  return "unknown";
}

dw_status dw_parse_witness(const char *name, dw_witness *out) {
  return guarded([&] {
    require(name && out, "null argument");
    *out = witness_of(dimwit::parse_witness(name));
  });
}

dw_status dw_quantum_bound(dw_witness witness, int n, int d, double *out) {
  return guarded([&] {
    require(out, "null output");
    *out = dimwit::quantum_bound(kind_of(witness), n, d);
  });
}

dw_status dw_classical_bound(dw_witness witness, int n, int d, double *out, int *available) {
  return guarded([&] {
    require(out && available, "null output");
    const auto bound = dimwit::classical_bound(kind_of(witness), n, d);
    *available = bound ? 1 : 0;
    *out = bound.value_or(0.0);
  });
}

dw_status dw_certify_dimension(dw_witness witness, int n, double value, int *min_quantum_dim,
                               int *min_classical_dim) {
  return guarded([&] {
    require(min_quantum_dim && min_classical_dim, "null output");
    const auto cert = dimwit::certify_dimension(kind_of(witness), n, value);
    *min_quantum_dim = cert.min_quantum_dim;
    *min_classical_dim = cert.min_classical_dim.value_or(0);
  });
}

dw_status dw_classical_enumerate(dw_witness witness, int n, int d, double *value, int *encoding,
                                 size_t encoding_len) {
  return guarded([&] {
    require(value, "null output");
    require(!encoding || encoding_len >= size_t(n > 0 ? n : 0), "encoding buffer shorter than N");
    const auto best = dimwit::enumerate_max(kind_of(witness), n, d);
    *value = best.value;
    if (encoding) {
      for (size_t i = 0; i < best.strategy.encoding.size(); ++i) encoding[i] = best.strategy.encoding[i];
    }
  });
}

dw_status dw_balanced_partition_value(int n, int d, double *out) {
  return guarded([&] {
    require(out, "null output");
    *out = dimwit::balanced_partition_value(n, d);
  });
}

dw_status dw_ensemble_fourier(int n, int d, dw_ensemble **out) {
  return guarded([&] {
    require(out, "null output");
    *out = new dw_ensemble{dimwit::fourier_ensemble(n, d)};
  });
}

dw_status dw_ensemble_from_pure(size_t n, size_t dim, const double *amplitudes, dw_ensemble **out) {
  return guarded([&] {
    require(out && amplitudes, "null argument");
    require(n >= 1 && dim >= 1, "ensemble needs n >= 1 and dim >= 1");
    std::vector<dimwit::StateVector> states;
    for (size_t x = 0; x < n; ++x) {
      dimwit::ComplexVector psi(dim);
      for (size_t k = 0; k < dim; ++k) {
        psi[k] = {amplitudes[2 * (x * dim + k)], amplitudes[2 * (x * dim + k) + 1]};
      }
      try {
        states.emplace_back(std::move(psi));
      } catch (const dimwit::Error &e) {
        throw dimwit::Error(e.code(), "state " + std::to_string(x + 1) + ": " + e.what());
      }
    }
    *out = new dw_ensemble{dimwit::Ensemble(std::move(states))};
  });
}

dw_status dw_ensemble_load(const char *path, dw_ensemble **out, dw_measurements **measurements) {
  return guarded([&] {
    require(path && out, "null argument");
    auto doc = dimwit::ensemble_from_json(dimwit::read_text_file(path));
    if (measurements) {
      *measurements = doc.measurements ? new dw_measurements{std::move(*doc.measurements)} : nullptr;
    }
    *out = new dw_ensemble{std::move(doc.ensemble)};
  });
}

dw_status dw_ensemble_save(const dw_ensemble *ensemble, const dw_measurements *measurements,
                           const char *path) {
  return guarded([&] {
    require(ensemble && path, "null argument");
    dimwit::write_text_file(
        path, dimwit::ensemble_to_json(ensemble->value, measurements ? &measurements->value : nullptr));
  });
}

dw_status dw_ensemble_to_json(const dw_ensemble *ensemble, const dw_measurements *measurements,
                              char **out) {
  return guarded([&] {
    require(ensemble && out, "null argument");
    *out = copy_string(
        dimwit::ensemble_to_json(ensemble->value, measurements ? &measurements->value : nullptr));
  });
}

void dw_ensemble_free(dw_ensemble *ensemble) { delete ensemble; }

size_t dw_ensemble_size(const dw_ensemble *ensemble) { return ensemble ? ensemble->value.size() : 0; }

size_t dw_ensemble_dim(const dw_ensemble *ensemble) { return ensemble ? ensemble->value.dim() : 0; }

dw_status dw_ensemble_fidelity(const dw_ensemble *ensemble, size_t x, size_t x_prime, double *out) {
  return guarded([&] {
    require(ensemble && out, "null argument");
    const auto &e = ensemble->value;
    require(x >= 1 && x <= e.size() && x_prime >= 1 && x_prime <= e.size(), "index out of range");
    const auto &psi = e.pure_state(x);
    const auto &phi = e.pure_state(x_prime);
    if (!psi || !phi) dimwit::fail(dimwit::ErrorCode::NotPure, "fidelity needs pure states");
    *out = dimwit::fidelity_pure(*psi, *phi);
  });
}

dw_status dw_ensemble_trace_distance(const dw_ensemble *ensemble, size_t x, size_t x_prime,
                                     double *out) {
  return guarded([&] {
    require(ensemble && out, "null argument");
    const auto &e = ensemble->value;
    require(x >= 1 && x <= e.size() && x_prime >= 1 && x_prime <= e.size(), "index out of range");
    *out = dimwit::trace_distance(e.state(x), e.state(x_prime));
  });
}

dw_status dw_ensemble_average_purity(const dw_ensemble *ensemble, double *out) {
  return guarded([&] {
    require(ensemble && out, "null argument");
    *out = dimwit::purity(dimwit::average_state(ensemble->value));
  });
}

dw_status dw_measurements_helstrom(const dw_ensemble *ensemble, dw_measurements **out) {
  return guarded([&] {
    require(ensemble && out, "null argument");
    require(ensemble->value.size() >= 2, "pair measurements need N >= 2");
    *out = new dw_measurements{dimwit::helstrom_measurements(ensemble->value)};
  });
}

void dw_measurements_free(dw_measurements *measurements) { delete measurements; }

dw_status dw_table_born(const dw_ensemble *ensemble, const dw_measurements *measurements,
                        dw_witness witness, dw_table **out) {
  return guarded([&] {
    require(ensemble && measurements && out, "null argument");
    const auto kind = kind_of(witness);
    require(kind != dimwit::WitnessKind::Guessing, "pair tables serve the quadratic or linear witness");
    *out = new dw_table{kind, dimwit::born_table(ensemble->value, measurements->value)};
  });
}

dw_status dw_table_noisy(const dw_ensemble *ensemble, const dw_measurements *measurements,
                         dw_witness witness, double depolarizing_eta, uint64_t shots,
                         uint64_t seed, dw_table **out) {
  return guarded([&] {
    require(ensemble && measurements && out, "null argument");
    const auto kind = kind_of(witness);
    require(kind != dimwit::WitnessKind::Guessing, "pair tables serve the quadratic or linear witness");
    dimwit::NoiseModel nm;
    nm.depolarizing_eta = depolarizing_eta;
    if (shots > 0) nm.shots = shots;
    *out = new dw_table{kind, dimwit::noisy_table(ensemble->value, measurements->value, nm, seed)};
  });
}

dw_status dw_table_guessing_srm(const dw_ensemble *ensemble, dw_table **out) {
  return guarded([&] {
    require(ensemble && out, "null argument");
    const auto effects = dimwit::square_root_measurement(ensemble->value);
    *out = new dw_table{dimwit::WitnessKind::Guessing,
                        dimwit::guessing_table(ensemble->value, effects)};
  });
}

dw_status dw_table_load(const char *path, dw_table **out) {
  return guarded([&] {
    require(path && out, "null argument");
    auto doc = dimwit::table_from_json(dimwit::read_text_file(path));
    *out = new dw_table{doc.witness, std::move(doc.table)};
  });
}

dw_status dw_table_save(const dw_table *table, const char *path) {
  return guarded([&] {
    require(table && path, "null argument");
    dimwit::write_text_file(path, dimwit::table_to_json(table->witness, table->value));
  });
}

dw_status dw_table_to_json(const dw_table *table, char **out) {
  return guarded([&] {
    require(table && out, "null argument");
    *out = copy_string(dimwit::table_to_json(table->witness, table->value));
  });
}

void dw_table_free(dw_table *table) { delete table; }

dw_witness dw_table_witness(const dw_table *table) {
  return table ? witness_of(table->witness) : DW_WITNESS_GUESSING;
}

size_t dw_table_preparations(const dw_table *table) {
  return table ? table->value.preparations() : 0;
}

dw_status dw_table_evaluate(const dw_table *table, dw_witness witness, double *out) {
  return guarded([&] {
    require(table && out, "null argument");
    *out = dimwit::evaluate(kind_of(witness), table->value);
  });
}

void dw_seesaw_config_init(dw_seesaw_config *cfg, dw_witness witness, int n, int d) {
  if (!cfg) return;
  const dimwit::SeesawConfig defaults;
  cfg->witness = witness;
  cfg->n = n;
  cfg->d = d;
  cfg->restarts = defaults.restarts;
  cfg->max_iters = defaults.max_iters;
  cfg->improvement_tol = defaults.improvement_tol;
  cfg->seed = defaults.seed;
}

dw_status dw_seesaw_run(const dw_seesaw_config *cfg, dw_seesaw_result **out) {
  return guarded([&] {
    require(cfg && out, "null argument");
    const auto config = config_of(*cfg);
    *out = new dw_seesaw_result{config, dimwit::optimize(config)};
  });
}

void dw_seesaw_free(dw_seesaw_result *result) { delete result; }

double dw_seesaw_best_value(const dw_seesaw_result *result) {
  return result ? result->value.best_value : 0.0;
}

int dw_seesaw_iterations_used(const dw_seesaw_result *result) {
  return result ? result->value.iterations_used : 0;
}

size_t dw_seesaw_restart_count(const dw_seesaw_result *result) {
  return result ? result->value.restart_values.size() : 0;
}

const double *dw_seesaw_restart_values(const dw_seesaw_result *result) {
  return result ? result->value.restart_values.data() : nullptr;
}

dw_status dw_seesaw_solution(const dw_seesaw_result *result, dw_ensemble **ensemble,
                             dw_measurements **measurements) {
  return guarded([&] {
    require(result && ensemble && measurements, "null argument");
    auto e = std::make_unique<dw_ensemble>(dw_ensemble{result->value.ensemble});
    *measurements = new dw_measurements{result->value.measurements};
    *ensemble = e.release();
  });
}

dw_status dw_seesaw_save(const dw_seesaw_result *result, const char *path) {
  return guarded([&] {
    require(result && path, "null argument");
    dimwit::write_text_file(path, dimwit::seesaw_dump_to_json(result->config, result->value));
  });
}

dw_status dw_seesaw_to_json(const dw_seesaw_result *result, char **out) {
  return guarded([&] {
    require(result && out, "null argument");
    *out = copy_string(dimwit::seesaw_dump_to_json(result->config, result->value));
  });
}

dw_status dw_verify_table2(int n_max, double tol, int restarts, uint64_t seed,
                           dw_tightness_entry *entries, size_t capacity, size_t *count) {
  return guarded([&] {
    require(count, "null output");
    require(n_max >= 3 && n_max <= 10, "n_max must lie in 3..10");
    size_t needed = 0;
    for (const auto &[n, d] : dimwit::linear_tight_pairs()) {
      if (n <= n_max) ++needed;
    }
    *count = needed;
    require(entries && capacity >= needed, "entry buffer too small");
    const auto report = dimwit::verify_table2(n_max, tol, restarts, seed);
    for (size_t i = 0; i < report.size(); ++i) {
      const auto &r = report[i];
      entries[i] = {r.n, r.d, r.best_value, r.bound, r.attained ? 1 : 0, r.asserted ? 1 : 0};
    }
  });
}

}  // extern "C"
