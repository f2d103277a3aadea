// Copyright 2026 The ptmoments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ptm/linalg.hpp"

namespace ptm {

/// Largest total Hilbert-space dimension handled by the library (12 qubits).
inline constexpr std::size_t kMaxDimension = 4096;

using Dims = std::vector<std::size_t>;

struct StateTolerance {
  double hermitian = 1e-12;  // max |M - M^H|
  double trace = 1e-12;      // |Tr M - 1|
  double psd = 1e-10;        // minimum eigenvalue >= -psd
};

/// Eigenvalues sorted in descending order.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(RealVector values);  // sorts descending

  const RealVector& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }
  double operator[](Eigen::Index i) const { return values_(i); }
  double min() const { return values_(values_.size() - 1); }
  double max() const { return values_(0); }
  double sum() const { return values_.sum(); }

 private:
  RealVector values_;
};

/// Hermitian, unit-trace, positive semidefinite matrix over an ordered list of
/// subsystem dimensions. Subsystem 0 is the leftmost (most significant) factor.
/// Immutable after construction.
class DensityMatrix {
 public:
  /// Validates every invariant; throws InvariantError naming the first one violated.
  DensityMatrix(ComplexMatrix matrix, Dims dims, StateTolerance tol = {});

  /// Single-factor state; dims = {dimension}.
  explicit DensityMatrix(ComplexMatrix matrix);

  /// Convex combination sum_k w_k |psi_k><psi_k| of normalized kets. Positivity
  /// holds by construction, so only weights and normalization are checked.
  static DensityMatrix mixture(std::span<const double> weights,
                               std::span<const ComplexVector> kets, Dims dims);

  static DensityMatrix pure(const ComplexVector& ket, Dims dims);
  static DensityMatrix maximally_mixed(Dims dims);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  std::size_t subsystem_count() const noexcept { return dims_.size(); }
  std::complex<double> operator()(Eigen::Index r, Eigen::Index c) const { return matrix_(r, c); }

  double purity() const;

 private:
  friend DensityMatrix tensor(const DensityMatrix&, const DensityMatrix&);
  friend DensityMatrix partial_trace(const DensityMatrix&, std::span<const std::size_t>);

  struct Trusted {};
  DensityMatrix(Trusted, ComplexMatrix matrix, Dims dims);

  ComplexMatrix matrix_;
  Dims dims_;
};

/// Computational basis ket |index> in dimension dim.
ComplexVector basis_ket(std::size_t dim, std::size_t index);

/// Kronecker product; dims concatenate. Throws DomainError beyond kMaxDimension.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced state over the subsystems listed in keep (any order, no duplicates);
/// the result keeps them in their original order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);

/// Transpose of one tensor factor. The result is Hermitian with unit trace but in
/// general not positive. Applying it twice returns the input exactly.
ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem);

/// Full eigendecomposition via cyclic Jacobi. Throws DomainError when the input
/// is not Hermitian to 1e-10 and ConvergenceError after 100 sweeps.
HermitianEigen<double> eigh(const ComplexMatrix& m);
Spectrum eigenvalues_hermitian(const ComplexMatrix& m);

}  // namespace ptm
