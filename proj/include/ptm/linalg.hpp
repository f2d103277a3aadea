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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ptm/error.hpp"

namespace ptm {

template <typename Real>
using ComplexMatrixT =
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Real>
using RealVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = RealVectorT<double>;

/// max_ij |m_ij - conj(m_ji)|
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermitian_defect(
    const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

template <typename Real>
struct HermitianEigen {
  RealVectorT<Real> values;       // descending
  ComplexMatrixT<Real> vectors;   // column k pairs with values(k)
  int sweeps = 0;
};

struct JacobiOptions {
  double tolerance = 1e-13;  // on the off-diagonal Frobenius norm, relative to max(1, ||M||_F)
  int max_sweeps = 100;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Only the Hermitian part (M + M^H)/2 is used. Each rotation zeroes one
/// off-diagonal pair with the unitary
///
///     G = [[c, s e], [-s conj(e), c]],   e = m_pq / |m_pq|,
///
/// applied as M <- G^H M G on rows/columns p, q. Throws ConvergenceError
/// when the off-diagonal norm is still above tolerance after max_sweeps.
template <typename Derived>
HermitianEigen<typename Eigen::NumTraits<typename Derived::Scalar>::Real> jacobi_eigh(
    const Eigen::MatrixBase<Derived>& input, JacobiOptions opts = {}) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Complex = std::complex<Real>;
  using std::abs;
  using std::sqrt;

  if (input.rows() != input.cols() || input.rows() == 0) {
    throw DomainError("jacobi_eigh: matrix must be square and non-empty");
  }
  const Eigen::Index n = input.rows();

  ComplexMatrixT<Real> a = input.template cast<Complex>();
  a = (a + a.adjoint().eval()) * Real(0.5);
  ComplexMatrixT<Real> q = ComplexMatrixT<Real>::Identity(n, n);

  const Real threshold =
      static_cast<Real>(opts.tolerance) * std::max(Real(1), a.norm());

  auto off_norm = [&] {
    Real sum = 0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index r = p + 1; r < n; ++r) sum += std::norm(a(p, r));
    return sqrt(Real(2) * sum);
  };

  int sweep = 0;
  for (; off_norm() >= threshold; ++sweep) {
    if (sweep == opts.max_sweeps) {
      throw ConvergenceError("jacobi_eigh: no convergence after " +
                             std::to_string(opts.max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index r = p + 1; r < n; ++r) {
        const Real mag = abs(a(p, r));
        if (mag == Real(0)) continue;
        const Complex e = a(p, r) / mag;
        const Real tau = (a(r, r).real() - a(p, p).real()) / (Real(2) * mag);
        Real t;
        if (abs(tau) > Real(1e150)) {
          t = Real(1) / (Real(2) * tau);
        } else {
          t = (tau >= 0 ? Real(1) : Real(-1)) / (abs(tau) + sqrt(Real(1) + tau * tau));
        }
        const Real c = Real(1) / sqrt(Real(1) + t * t);
        const Real s = t * c;
        const Complex se = s * e;
        const Complex sec = s * std::conj(e);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akr = a(k, r);
          a(k, p) = c * akp - sec * akr;
          a(k, r) = se * akp + c * akr;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex ark = a(r, k);
          a(p, k) = c * apk - se * ark;
          a(r, k) = sec * apk + c * ark;
        }
        a(p, r) = Complex(0);
        a(r, p) = Complex(0);
        a(p, p) = Complex(a(p, p).real(), 0);
        a(r, r) = Complex(a(r, r).real(), 0);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex qkp = q(k, p);
          const Complex qkr = q(k, r);
          q(k, p) = c * qkp - sec * qkr;
          q(k, r) = se * qkp + c * qkr;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() > a(j, j).real();
  });

  HermitianEigen<Real> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = q.col(src);
  }
  out.sweeps = sweep;
  return out;
}

}  // namespace ptm
