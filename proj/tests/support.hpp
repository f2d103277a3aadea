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

// Hand-rolled generators for property tests.

#include <cmath>
#include <cstdint>

#include "ptm/linalg.hpp"
#include "ptm/qstate.hpp"
#include "ptm/random.hpp"

namespace ptm::testing {

inline ComplexMatrix random_complex(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.complex_normal();
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, Eigen::Index n) {
  const ComplexMatrix g = random_complex(rng, n, n);
  return (g + g.adjoint()) / 2.0;
}

inline ComplexVector random_ket(Rng& rng, Eigen::Index n) {
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

/// Random state of the given dims, rank `rank` (Ginibre n x rank).
inline DensityMatrix random_state(Rng& rng, const Dims& dims, Eigen::Index rank = 0) {
  Eigen::Index n = 1;
  for (auto d : dims) n *= static_cast<Eigen::Index>(d);
  if (rank <= 0) rank = n;
  const ComplexMatrix g = random_complex(rng, n, rank);
  ComplexMatrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho), dims);
}

/// Random product state rho_A (x) rho_B of two qubits.
inline DensityMatrix random_product_state(Rng& rng) {
  return tensor(random_state(rng, {2}), random_state(rng, {2}));
}

/// Random separable two-qubit state: mixture of k product pure states.
inline DensityMatrix random_separable_state(Rng& rng, int k) {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  double total = 0;
  for (int i = 0; i < k; ++i) {
    const double w = rng.uniform_positive();
    const ComplexVector v = kron(random_ket(rng, 2), random_ket(rng, 2));
    rho += w * (v * v.adjoint());
    total += w;
  }
  rho /= total;
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityMatrix(std::move(rho), {2, 2});
}

inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

}  // namespace ptm::testing
