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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "ptm/error.hpp"
#include "ptm/linalg.hpp"
#include "ptm/qstate.hpp"
#include "support.hpp"

namespace ptm {
namespace {

using testing::random_hermitian;
using testing::random_state;

std::string violated_invariant(ComplexMatrix m, Dims dims) {
  try {
    DensityMatrix rho(std::move(m), std::move(dims));
  } catch (const InvariantError& e) {
    return e.invariant();
  }
  return "";
}

TEST(Jacobi, MatchesSelfAdjointEigenSolver) {
  Rng rng(11, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index n = 1 + trial % 8;
    const ComplexMatrix m = random_hermitian(rng, n);
    const auto ours = jacobi_eigh(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(Eigen::MatrixXcd(m), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd expected = ref.eigenvalues().reverse();
    ASSERT_EQ(ours.values.size(), n);
    for (Eigen::Index i = 0; i < n; ++i) EXPECT_NEAR(ours.values(i), expected(i), 1e-11);
  }
}

TEST(Jacobi, EigenvectorsReconstruct) {
  Rng rng(12, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix m = random_hermitian(rng, 6);
    const auto e = jacobi_eigh(m);
    const ComplexMatrix q = e.vectors;
    const ComplexMatrix rebuilt = q * e.values.cast<std::complex<double>>().asDiagonal() * q.adjoint();
    EXPECT_LT((rebuilt - m).norm(), 1e-11);
    EXPECT_LT((q.adjoint() * q - ComplexMatrix::Identity(6, 6)).norm(), 1e-12);
    for (Eigen::Index i = 1; i < 6; ++i) EXPECT_GE(e.values(i - 1), e.values(i));
  }
}

TEST(Jacobi, DiagonalAndDegenerateInputs) {
  ComplexMatrix d = ComplexMatrix::Zero(4, 4);
  d.diagonal() << 0.1, 0.4, 0.4, 0.1;
  const auto e = jacobi_eigh(d);
  EXPECT_DOUBLE_EQ(e.values(0), 0.4);
  EXPECT_DOUBLE_EQ(e.values(3), 0.1);
  EXPECT_EQ(e.sweeps, 0);

  const auto z = jacobi_eigh(ComplexMatrix::Zero(3, 3));
  EXPECT_EQ(z.values.norm(), 0.0);
}

TEST(Jacobi, TemplatedOnScalar) {
  ComplexMatrixT<float> m(2, 2);
  m << 2.0f, std::complex<float>(0, 1), std::complex<float>(0, -1), 2.0f;
  const auto e = jacobi_eigh(m, {1e-6, 50});
  EXPECT_NEAR(e.values(0), 3.0f, 1e-5f);
  EXPECT_NEAR(e.values(1), 1.0f, 1e-5f);
}

TEST(Spectrum, SortsDescending) {
  RealVector v(4);
  v << 0.1, 0.5, -0.2, 0.3;
  const Spectrum s(v);
  EXPECT_DOUBLE_EQ(s[0], 0.5);
  EXPECT_DOUBLE_EQ(s.min(), -0.2);
  EXPECT_DOUBLE_EQ(s.max(), 0.5);
  EXPECT_NEAR(s.sum(), 0.7, 1e-15);
}

TEST(DensityMatrix, MaximallyMixed) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed({2, 2});
  EXPECT_EQ(rho.dim(), 4u);
  EXPECT_DOUBLE_EQ(rho.purity(), 0.25);
}

TEST(DensityMatrix, RejectsNonSquare) {
  EXPECT_EQ(violated_invariant(ComplexMatrix::Zero(2, 3), {2}), "square");
}

TEST(DensityMatrix, RejectsDimsMismatch) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
  const std::string inv = violated_invariant(m, {2, 3});
  EXPECT_FALSE(inv.empty());
}

TEST(DensityMatrix, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 1) = 0.1;
  EXPECT_EQ(violated_invariant(m, {2}), "Hermitian");
}

TEST(DensityMatrix, RejectsTrace) {
  EXPECT_EQ(violated_invariant(ComplexMatrix::Identity(2, 2), {2}), "unit trace");
}

TEST(DensityMatrix, RejectsNegativeEigenvalue) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 1.2;
  m(1, 1) = -0.2;
  EXPECT_EQ(violated_invariant(m, {2}), "positive semidefinite");
}

TEST(DensityMatrix, RejectsNonFinite) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) / 2.0;
  m(0, 0) = std::nan("");
  EXPECT_EQ(violated_invariant(m, {2}), "finite");
}

TEST(DensityMatrix, PureAndMixture) {
  const ComplexVector k0 = basis_ket(4, 0), k3 = basis_ket(4, 3);
  const DensityMatrix p = DensityMatrix::pure(k0, {2, 2});
  EXPECT_DOUBLE_EQ(p.purity(), 1.0);
  const double w[] = {0.25, 0.75};
  const ComplexVector kets[] = {k0, k3};
  const DensityMatrix m = DensityMatrix::mixture(w, kets, {2, 2});
  EXPECT_DOUBLE_EQ(m(0, 0).real(), 0.25);
  EXPECT_DOUBLE_EQ(m(3, 3).real(), 0.75);
}

TEST(QState, KronOfBasis) {
  const ComplexMatrix k = kron(ComplexMatrix(basis_ket(2, 1)), ComplexMatrix(basis_ket(2, 0)));
  EXPECT_EQ(k(2, 0), std::complex<double>(1));
  EXPECT_EQ(k.cwiseAbs().sum(), 1.0);
}

TEST(QState, PartialTraceOfProductRecoversFactors) {
  Rng rng(21, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix a = random_state(rng, {2});
    const DensityMatrix b = random_state(rng, {3});
    const DensityMatrix ab = tensor(a, b);
    EXPECT_EQ(ab.dims(), (Dims{2, 3}));
    EXPECT_LT((partial_trace(ab, {0}).matrix() - a.matrix()).norm(), 1e-14);
    EXPECT_LT((partial_trace(ab, {1}).matrix() - b.matrix()).norm(), 1e-14);
  }
}

TEST(QState, PartialTraceErrors) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed({2, 2});
  EXPECT_THROW(partial_trace(rho, {}), DomainError);
  EXPECT_THROW(partial_trace(rho, {2}), DomainError);
  EXPECT_THROW(partial_trace(rho, {0, 0}), DomainError);
}

TEST(QState, PartialTraceIsConsistentAcrossOrders) {
  Rng rng(22, 0);
  const DensityMatrix rho = random_state(rng, {2, 2, 2});
  const DensityMatrix ab = partial_trace(rho, {0, 1});
  const DensityMatrix a1 = partial_trace(ab, {0});
  const DensityMatrix a2 = partial_trace(rho, {0});
  EXPECT_LT((a1.matrix() - a2.matrix()).norm(), 1e-14);
}

TEST(QState, PartialTransposeProperties) {
  Rng rng(23, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho = random_state(rng, {2, 2});
    const ComplexMatrix g1 = partial_transpose(rho, 1);
    const ComplexMatrix g0 = partial_transpose(rho, 0);
    // Involution, Hermitian, trace preserving; the two partial transposes
    // are related by a full transpose.
    const std::size_t dims[] = {2, 2};
    EXPECT_LT((partial_transpose(g1, dims, 1) - rho.matrix()).norm(), 1e-15);
    EXPECT_LT(hermitian_defect(g1), 1e-15);
    EXPECT_NEAR(g1.trace().real(), 1.0, 1e-14);
    EXPECT_LT((g0 - g1.transpose()).norm(), 1e-15);
  }
}

TEST(QState, PartialTransposeOfBellStateSwapsEntries) {
  ComplexVector phi = (basis_ket(4, 0) + basis_ket(4, 3)) / std::sqrt(2.0);
  const ComplexMatrix g = partial_transpose(DensityMatrix::pure(phi, {2, 2}), 1);
  EXPECT_NEAR(g(1, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(g(0, 3).real(), 0.0, 1e-15);
  const Spectrum s = eigenvalues_hermitian(g);
  EXPECT_NEAR(s.min(), -0.5, 1e-14);
}

TEST(QState, PartialTransposeErrors) {
  const DensityMatrix one = DensityMatrix::maximally_mixed({4});
  EXPECT_THROW(partial_transpose(one, 0), DomainError);
  const DensityMatrix two = DensityMatrix::maximally_mixed({2, 2});
  EXPECT_THROW(partial_transpose(two, 2), DomainError);
}

TEST(QState, EighRejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1;
  EXPECT_THROW(eigh(m), DomainError);
}

TEST(QState, TensorDimensionCap) {
  const DensityMatrix big = DensityMatrix::maximally_mixed({64});
  EXPECT_THROW(tensor(big, DensityMatrix::maximally_mixed({128})), Error);
}

// Property: eigenvalues of random states are non-negative and sum to one.
TEST(QStateProperty, RandomStatesHaveValidSpectra) {
  Rng rng(24, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_state(rng, {2, 2}, 1 + trial % 4);
    const Spectrum s = eigenvalues_hermitian(rho.matrix());
    EXPECT_GT(s.min(), -1e-12);
    EXPECT_NEAR(s.sum(), 1.0, 1e-12);
    EXPECT_NEAR(rho.purity(), s.values().squaredNorm(), 1e-12);
  }
}

}  // namespace
}  // namespace ptm
