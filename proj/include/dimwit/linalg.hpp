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

#ifndef DIMWIT_LINALG_HPP
#define DIMWIT_LINALG_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "dimwit/tolerances.hpp"

namespace dimwit {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |v><w|
  static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);
  static ComplexMatrix projector(std::span<const Complex> v) { return outer(v, v); }

  std::size_t dim() const { return dim_; }
  std::span<const Complex> entries() const { return entries_; }

  Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
  const Complex &operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  ComplexMatrix &operator+=(const ComplexMatrix &other);
  ComplexMatrix &operator-=(const ComplexMatrix &other);
  ComplexMatrix &operator*=(Complex scale);

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// max_ij |A_ij - conj(A_ji)|
  double hermitian_deviation() const;
  double max_abs() const;
  double frobenius_norm() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector operator*(const ComplexMatrix &a, std::span<const Complex> v);

/// tr(A B) without forming the product.
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);
/// <v|w>, conjugate-linear in the first argument.
Complex inner_product(std::span<const Complex> v, std::span<const Complex> w);
double vector_norm(std::span<const Complex> v);

struct EigenDecomposition {
  std::vector<double> eigenvalues;         // descending
  std::vector<ComplexVector> eigenvectors;  // unit norm, paired with eigenvalues
};

/// Throws Error(NotHermitian) naming the deviation when the check fails.
void require_hermitian(const ComplexMatrix &a, const Tolerances &tol = default_tolerances());

/// Cyclic Jacobi eigensolver for Hermitian matrices.
EigenDecomposition eig_hermitian(const ComplexMatrix &a,
                                 const Tolerances &tol = default_tolerances());

/// Sum of absolute eigenvalues.
double trace_norm(const ComplexMatrix &a, const Tolerances &tol = default_tolerances());

/// Projector onto the span of eigenvectors with eigenvalue above the zero
/// cutoff.
ComplexMatrix positive_part_projector(const ComplexMatrix &a,
                                      const Tolerances &tol = default_tolerances());

/// f(A) = sum_i f(lambda_i) v_i v_i^dagger for Hermitian A.
template <class F>
ComplexMatrix apply_spectral(const ComplexMatrix &a, F &&f,
                             const Tolerances &tol = default_tolerances()) {
  const EigenDecomposition eig = eig_hermitian(a, tol);
  ComplexMatrix out(a.dim());
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    out += ComplexMatrix::projector(eig.eigenvectors[i]) * Complex(f(eig.eigenvalues[i]));
  }
  return out;
}

}  // namespace dimwit

#endif  // DIMWIT_LINALG_HPP
