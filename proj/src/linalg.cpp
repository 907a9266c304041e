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

#include "dimwit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dimwit/error.hpp"

namespace dimwit {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    fail(ErrorCode::DimensionMismatch,
         "matrix of dim " + std::to_string(dim_) + " needs " + std::to_string(dim_ * dim_) +
             " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
  if (v.size() != w.size()) fail(ErrorCode::DimensionMismatch, "outer product of unequal vectors");
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  }
  return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
  if (other.dim_ != dim_) fail(ErrorCode::DimensionMismatch, "matrix sum of unequal dims");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
  if (other.dim_ != dim_) fail(ErrorCode::DimensionMismatch, "matrix difference of unequal dims");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
  for (auto &z : entries_) z *= scale;
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermitian_deviation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

double ComplexMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto &z : entries_) worst = std::max(worst, std::abs(z));
  return worst;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto &z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "matrix product of unequal dims");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v) {
  if (a.dim() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector product mismatch");
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "trace of product of unequal dims");
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(j, i);
  }
  return t;
}

Complex inner_product(std::span<const Complex> v, std::span<const Complex> w) {
  if (v.size() != w.size()) fail(ErrorCode::DimensionMismatch, "inner product of unequal vectors");
  Complex s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * w[i];
  return s;
}

double vector_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto &z : v) s += std::norm(z);
  return std::sqrt(s);
}

void require_hermitian(const ComplexMatrix &a, const Tolerances &tol) {
  const double deviation = a.hermitian_deviation();
  if (!(deviation <= tol.hermitian)) {
    fail(ErrorCode::NotHermitian,
         "matrix is not Hermitian: max |A_ij - conj(A_ji)| = " + std::to_string(deviation));
  }
}

namespace {

double off_diagonal_norm(const ComplexMatrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Zeroes a(p, q) with the unitary J = diag(1, e^{-i phi}) R(theta) acting on
// columns p, q: a <- J^dagger a J, v <- v J.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = 0.5 * std::atan2(2.0 * r, aqq - app);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex j00 = c, j01 = s;
  const Complex j10 = -s * std::conj(phase), j11 = c * std::conj(phase);
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * j00 + akq * j10;
    a(k, q) = akp * j01 + akq * j11;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(j00) * apk + std::conj(j10) * aqk;
    a(q, k) = std::conj(j01) * apk + std::conj(j11) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * j00 + vkq * j10;
    v(k, q) = vkp * j01 + vkq * j11;
  }
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix &input, const Tolerances &tol) {
  if (input.dim() == 0) fail(ErrorCode::BadArgument, "eigendecomposition of empty matrix");
  require_hermitian(input, tol);
  const std::size_t n = input.dim();

  // Work on the exactly Hermitian part so roundoff asymmetry cannot accumulate.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = tol.jacobi_off_diagonal * std::max(1.0, a.frobenius_norm());
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep++ >= tol.jacobi_max_sweeps) {
      fail(ErrorCode::NoConvergence, "Jacobi eigensolver did not converge in " +
                                         std::to_string(tol.jacobi_max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t idx : order) {
    out.eigenvalues.push_back(a(idx, idx).real());
    ComplexVector vec(n);
    for (std::size_t k = 0; k < n; ++k) vec[k] = v(k, idx);
    const double norm = vector_norm(vec);
    for (auto &z : vec) z /= norm;
    out.eigenvectors.push_back(std::move(vec));
  }
  return out;
}

double trace_norm(const ComplexMatrix &a, const Tolerances &tol) {
  double s = 0.0;
  for (double lambda : eig_hermitian(a, tol).eigenvalues) s += std::abs(lambda);
  return s;
}

ComplexMatrix positive_part_projector(const ComplexMatrix &a, const Tolerances &tol) {
  const EigenDecomposition eig = eig_hermitian(a, tol);
  ComplexMatrix p(a.dim());
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    if (eig.eigenvalues[i] > tol.zero_eigenvalue) p += ComplexMatrix::projector(eig.eigenvectors[i]);
  }
  return p;
}

}  // namespace dimwit
