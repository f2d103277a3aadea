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

#include "ptm/qstate.hpp"

#include <functional>
#include <sstream>

#include <Eigen/Cholesky>

namespace ptm {
namespace {

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

// Row-major strides: index 0 is the most significant digit.
std::vector<std::size_t> strides_of(std::span<const std::size_t> dims) {
  std::vector<std::size_t> st(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) st[k - 1] = st[k] * dims[k];
  return st;
}

std::string describe(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

void check_shape(const ComplexMatrix& m, const Dims& dims) {
  if (m.rows() != m.cols()) throw InvariantError("square", "matrix is not square");
  if (m.rows() < 1) throw InvariantError("square", "matrix is empty");
  if (dims.empty()) throw InvariantError("dims", "subsystem list is empty");
  for (std::size_t d : dims) {
    if (d < 1) throw InvariantError("dims", "subsystem dimension must be positive");
  }
  if (static_cast<std::size_t>(m.rows()) > kMaxDimension) {
    throw InvariantError("dimension cap", "dimension " + std::to_string(m.rows()) +
                                              " exceeds " + std::to_string(kMaxDimension));
  }
  if (product(dims) != static_cast<std::size_t>(m.rows())) {
    throw InvariantError("dims", "product of subsystem dimensions does not match matrix size");
  }
  if (!all_finite(m)) throw InvariantError("finite", "matrix has non-finite entries");
}

void check_unit_trace(const ComplexMatrix& m, double tol) {
  const std::complex<double> tr = m.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw InvariantError("unit trace", "|Tr - 1| = " + describe(std::abs(tr - 1.0)));
  }
}

}  // namespace

Spectrum::Spectrum(RealVector values) : values_(std::move(values)) {
  std::sort(values_.data(), values_.data() + values_.size(), std::greater<>());
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, Dims dims, StateTolerance tol)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  check_shape(matrix_, dims_);
  const double herm = hermitian_defect(matrix_);
  if (herm > tol.hermitian) {
    throw InvariantError("Hermitian", "max|M - M^H| = " + describe(herm));
  }
  check_unit_trace(matrix_, tol.trace);

  const Eigen::Index n = matrix_.rows();
  Eigen::MatrixXcd shifted = (matrix_ + matrix_.adjoint()) * 0.5;
  shifted.diagonal().array() += tol.psd;
  Eigen::LLT<Eigen::MatrixXcd> llt(shifted);
  if (llt.info() != Eigen::Success) {
    std::string detail = "matrix has an eigenvalue below -" + describe(tol.psd);
    if (n <= 64) detail = "minimum eigenvalue " + describe(jacobi_eigh(matrix_).values(n - 1));
    throw InvariantError("positive semidefinite", detail);
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix)
    : DensityMatrix(matrix, Dims{static_cast<std::size_t>(matrix.rows())}) {}

DensityMatrix::DensityMatrix(Trusted, ComplexMatrix matrix, Dims dims)
    : matrix_(std::move(matrix)), dims_(std::move(dims)) {}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights,
                                     std::span<const ComplexVector> kets, Dims dims) {
  if (weights.size() != kets.size() || weights.empty()) {
    throw DomainError("mixture: need one weight per ket");
  }
  const std::size_t dim = product(dims);
  if (dims.empty() || dim > kMaxDimension) {
    throw DomainError("mixture: invalid dims");
  }
  double total = 0;
  for (double w : weights) {
    if (!(w >= 0)) throw InvariantError("positive semidefinite", "negative mixture weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvariantError("unit trace", "mixture weights sum to " + describe(total));
  }
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < kets.size(); ++k) {
    const ComplexVector& ket = kets[k];
    if (static_cast<std::size_t>(ket.size()) != dim) {
      throw DomainError("mixture: ket dimension does not match dims");
    }
    if (std::abs(ket.squaredNorm() - 1.0) > 1e-12) {
      throw InvariantError("unit trace", "ket is not normalized");
    }
    if (weights[k] == 0) continue;
    m.noalias() += weights[k] * (ket * ket.adjoint());
  }
  check_shape(m, dims);
  return DensityMatrix(Trusted{}, std::move(m), std::move(dims));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& ket, Dims dims) {
  const double w = 1.0;
  return mixture(std::span(&w, 1), std::span(&ket, 1), std::move(dims));
}

DensityMatrix DensityMatrix::maximally_mixed(Dims dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  ComplexMatrix m = ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  return DensityMatrix(std::move(m), std::move(dims));
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  return matrix_.squaredNorm();
}

ComplexVector basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DomainError("basis_ket: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() * b.dim() > kMaxDimension) {
    throw DomainError("tensor: dimension " + std::to_string(a.dim() * b.dim()) +
                      " exceeds cap " + std::to_string(kMaxDimension));
  }
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix(DensityMatrix::Trusted{}, kron(a.matrix(), b.matrix()), std::move(dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const Dims& dims = rho.dims();
  if (keep.empty()) throw DomainError("partial_trace: keep set is empty");
  std::vector<bool> kept(dims.size(), false);
  for (std::size_t k : keep) {
    if (k >= dims.size()) {
      throw DomainError("partial_trace: subsystem index " + std::to_string(k) + " out of range");
    }
    if (kept[k]) throw DomainError("partial_trace: duplicate subsystem index");
    kept[k] = true;
  }

  Dims kept_dims, traced_dims;
  for (std::size_t k = 0; k < dims.size(); ++k) (kept[k] ? kept_dims : traced_dims).push_back(dims[k]);
  const std::size_t nk = product(kept_dims);
  const std::size_t nt = product(traced_dims);

  // full_index[kk * nt + tt] for kept multi-index kk and traced multi-index tt.
  const auto st = strides_of(dims);
  std::vector<std::size_t> full_index(nk * nt);
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    std::size_t kk = 0, tt = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const std::size_t digit = (i / st[k]) % dims[k];
      if (kept[k]) {
        kk = kk * dims[k] + digit;
      } else {
        tt = tt * dims[k] + digit;
      }
    }
    full_index[kk * nt + tt] = i;
  }

  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(nk), static_cast<Eigen::Index>(nk));
  for (std::size_t r = 0; r < nk; ++r) {
    for (std::size_t c = 0; c < nk; ++c) {
      std::complex<double> acc = 0;
      for (std::size_t t = 0; t < nt; ++t) {
        acc += m(static_cast<Eigen::Index>(full_index[r * nt + t]),
                 static_cast<Eigen::Index>(full_index[c * nt + t]));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix(DensityMatrix::Trusted{}, std::move(out), std::move(kept_dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                std::size_t subsystem) {
  if (dims.size() < 2) throw DomainError("partial_transpose: need at least two subsystems");
  if (subsystem >= dims.size()) {
    throw DomainError("partial_transpose: subsystem index " + std::to_string(subsystem) +
                      " out of range");
  }
  if (m.rows() != m.cols() || product(dims) != static_cast<std::size_t>(m.rows())) {
    throw DomainError("partial_transpose: dims do not match matrix");
  }
  const auto st = strides_of(dims)[subsystem];
  const std::size_t d = dims[subsystem];
  const auto n = static_cast<std::size_t>(m.rows());

  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t di = (i / st) % d;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dj = (j / st) % d;
      const std::size_t ii = i - di * st + dj * st;
      const std::size_t jj = j - dj * st + di * st;
      out(static_cast<Eigen::Index>(ii), static_cast<Eigen::Index>(jj)) =
          m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  return partial_transpose(rho.matrix(), rho.dims(), subsystem);
}

HermitianEigen<double> eigh(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw DomainError("eigh: matrix must be square");
  if (!all_finite(m)) throw DomainError("eigh: non-finite entries");
  const double herm = hermitian_defect(m);
  if (herm > 1e-10) throw DomainError("eigh: matrix is not Hermitian (defect " + describe(herm) + ")");
  return jacobi_eigh(m);
}

Spectrum eigenvalues_hermitian(const ComplexMatrix& m) { return Spectrum(eigh(m).values); }

}  // namespace ptm
