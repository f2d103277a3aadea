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

#include "ptm/families.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ptm/curves.hpp"

namespace ptm {
namespace {

using cd = std::complex<double>;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void require_unit_interval(double v, const char* who) {
  if (!(v >= 0 && v <= 1)) {
    throw DomainError(std::string(who) + ": parameter " + std::to_string(v) + " outside [0, 1]");
  }
}

ComplexMatrix diagonal_state(double a, double b, double c, double d) {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

ComplexVector two_qubit_ket(cd c00, cd c01, cd c10, cd c11) {
  ComplexVector v(4);
  v << c00, c01, c10, c11;
  return v;
}

void require_qubits(int n, int max_n, const char* who) {
  if (n < 2 || n > max_n) {
    throw DomainError(std::string(who) + ": n = " + std::to_string(n) + " outside [2, " +
                      std::to_string(max_n) + "]");
  }
}

void require_ghzw(const GHZWParams& p, const char* who) {
  if (p.n < 2) throw DomainError(std::string(who) + ": n must be >= 2");
  require_unit_interval(p.lambda, who);
}

}  // namespace

ComplexVector bell_phi_plus() { return two_qubit_ket(kInvSqrt2, 0, 0, kInvSqrt2); }
ComplexVector bell_phi_minus() { return two_qubit_ket(kInvSqrt2, 0, 0, -kInvSqrt2); }
ComplexVector bell_psi_plus() { return two_qubit_ket(0, kInvSqrt2, kInvSqrt2, 0); }
ComplexVector bell_psi_minus() { return two_qubit_ket(0, kInvSqrt2, -kInvSqrt2, 0); }

const std::array<ComplexMatrix, 3>& pauli_matrices() {
  static const std::array<ComplexMatrix, 3> paulis = [] {
    std::array<ComplexMatrix, 3> s;
    for (auto& m : s) m = ComplexMatrix::Zero(2, 2);
    s[0](0, 1) = 1;
    s[0](1, 0) = 1;
    s[1](0, 1) = cd(0, 1);
    s[1](1, 0) = cd(0, -1);
    s[2](0, 0) = 1;
    s[2](1, 1) = -1;
    return s;
  }();
  return paulis;
}

// --- Werner -----------------------------------------------------------------

DensityMatrix werner_state(WernerParam p) {
  require_unit_interval(p.w, "werner_state");
  const ComplexVector psi = bell_psi_minus();
  ComplexMatrix m = p.w * (psi * psi.adjoint()) +
                    (1 - p.w) * ComplexMatrix::Identity(4, 4) / 4.0;
  return DensityMatrix(std::move(m), {2, 2});
}

MomentPair werner_moments(WernerParam p) {
  require_unit_interval(p.w, "werner_moments");
  const double w = p.w;
  return {(1 + 3 * w * w) / 4, (-6 * w * w * w + 9 * w * w + 1) / 16};
}

// --- Bell-diagonal ------------------------------------------------------------

bool in_bell_tetrahedron(const BellVector& v, double slack) {
  const auto [a, b, c] = v;
  return 1 - a - b - c >= -slack && 1 - a + b + c >= -slack && 1 + a - b + c >= -slack &&
         1 + a + b - c >= -slack;
}

namespace {
void require_tetrahedron(const BellVector& v, const char* who) {
  if (!in_bell_tetrahedron(v)) {
    throw InvariantError("Bell tetrahedron", std::string(who) + ": (" + std::to_string(v.t1) +
                                                 ", " + std::to_string(v.t2) + ", " +
                                                 std::to_string(v.t3) + ") is not a valid state");
  }
}
}  // namespace

DensityMatrix bell_state(const BellVector& v) {
  require_tetrahedron(v, "bell_state");
  const auto& s = pauli_matrices();
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m += v.t1 * kron(s[0], s[0]) + v.t2 * kron(s[1], s[1]) + v.t3 * kron(s[2], s[2]);
  m /= 4.0;
  return DensityMatrix(std::move(m), {2, 2});
}

bool bell_is_separable(const BellVector& v) {
  return std::abs(v.t1) + std::abs(v.t2) + std::abs(v.t3) <= 1 + 1e-12;
}

Spectrum bell_pt_spectrum(const BellVector& v) {
  const auto [a, b, c] = v;
  RealVector x(4);
  x << (1 + a - b - c) / 4, (1 - a + b - c) / 4, (1 + a + b + c) / 4, (1 - a - b + c) / 4;
  return Spectrum(std::move(x));
}

BellMoments bell_moments(const BellVector& v) {
  require_tetrahedron(v, "bell_moments");
  const auto [a, b, c] = v;
  const double sq = a * a + b * b + c * c;
  const double g = a * b * c;
  const double quartic = a * a * a * a + b * b * b * b + c * c * c * c;
  const double pairs = a * a * b * b + a * a * c * c + b * b * c * c;
  BellMoments m;
  m.p2 = (1 + sq) / 4;
  m.p3 = (1 + 6 * g + 3 * sq) / 16;
  m.p4 = (1 + 24 * g + 6 * sq + quartic + 6 * pairs) / 64;
  m.negativity = (std::abs(1 + a - b - c) + std::abs(1 - a + b - c) + std::abs(1 + a + b + c) +
                  std::abs(1 - a - b + c) - 4) /
                 8;
  return m;
}

BellVector sample_bell_vector(Rng& rng) {
  for (;;) {
    BellVector v{2 * rng.uniform() - 1, 2 * rng.uniform() - 1, 2 * rng.uniform() - 1};
    if (in_bell_tetrahedron(v, 0.0)) return v;
  }
}

// --- Boundary families ------------------------------------------------------

namespace {
struct CurveName {
  BoundaryCurve curve;
  std::string_view name;
};
constexpr CurveName kCurveNames[] = {
    {BoundaryCurve::PhiPlus, "phi_plus"},       {BoundaryCurve::Phi4High, "phi4_high"},
    {BoundaryCurve::Phi4Mid, "phi4_mid"},       {BoundaryCurve::Phi4LowWerner, "phi4_low_werner"},
    {BoundaryCurve::WernerLowest, "werner_lowest"}, {BoundaryCurve::BellQuarter, "bell_quarter"},
    {BoundaryCurve::BellMid, "bell_mid"},       {BoundaryCurve::BellLow, "bell_low"},
};
}  // namespace

std::string_view to_string(BoundaryCurve curve) {
  for (const auto& c : kCurveNames)
    if (c.curve == curve) return c.name;
  return "?";
}

BoundaryCurve boundary_curve_from_string(std::string_view name) {
  for (const auto& c : kCurveNames)
    if (c.name == name) return c.curve;
  throw DomainError("unknown boundary curve '" + std::string(name) + "'");
}

ParamRange boundary_param_range(BoundaryCurve curve) {
  switch (curve) {
    case BoundaryCurve::PhiPlus: return {0, 0.25};
    case BoundaryCurve::Phi4High: return {0, 1};
    case BoundaryCurve::Phi4Mid: return {1.0 / 3.0, 0.5};
    case BoundaryCurve::Phi4LowWerner: return {0, 1.0 / 3.0};
    case BoundaryCurve::WernerLowest: return {0, 1};
    case BoundaryCurve::BellQuarter: return {0, 1};
    case BoundaryCurve::BellMid: return {0, 1.0 / 3.0};
    case BoundaryCurve::BellLow: return {0, 1.0 / 3.0};
  }
  throw DomainError("unknown boundary curve");
}

DensityMatrix boundary_state(BoundaryCurve curve, double param) {
  const ParamRange range = boundary_param_range(curve);
  if (!(param >= range.lo && param <= range.hi)) {
    throw DomainError("boundary_state: parameter " + std::to_string(param) + " outside [" +
                      std::to_string(range.lo) + ", " + std::to_string(range.hi) + "] for " +
                      std::string(to_string(curve)));
  }
  const double l = param;
  switch (curve) {
    case BoundaryCurve::PhiPlus:
      return DensityMatrix(diagonal_state(l, l, l, 1 - 3 * l), {2, 2});
    case BoundaryCurve::Phi4High:
      return DensityMatrix(diagonal_state(l, 1 - l, 0, 0), {2, 2});
    case BoundaryCurve::Phi4Mid:
      return DensityMatrix(diagonal_state(l, l, 1 - 2 * l, 0), {2, 2});
    case BoundaryCurve::Phi4LowWerner:
    case BoundaryCurve::WernerLowest:
      return werner_state({l});
    case BoundaryCurve::BellQuarter: {
      const double w[] = {l, 1 - l};
      const ComplexVector kets[] = {bell_phi_plus(), bell_phi_minus()};
      return DensityMatrix::mixture(w, kets, {2, 2});
    }
    case BoundaryCurve::BellMid:
      return bell_state({l, l, 1 - 2 * l});
    case BoundaryCurve::BellLow:
      return bell_state({l, l, l});
  }
  throw DomainError("unknown boundary curve");
}

double boundary_curve_value(BoundaryCurve curve, double p2) {
  switch (curve) {
    case BoundaryCurve::PhiPlus: return phi4_plus(p2);
    case BoundaryCurve::Phi4High:
    case BoundaryCurve::Phi4Mid:
    case BoundaryCurve::Phi4LowWerner: return phi4_piecewise(p2);
    case BoundaryCurve::WernerLowest: return phi4_minus(p2);
    case BoundaryCurve::BellQuarter: return 0.25;
    case BoundaryCurve::BellMid:
    case BoundaryCurve::BellLow: return phi4_bell(p2);
  }
  throw DomainError("unknown boundary curve");
}

// --- X-states -----------------------------------------------------------------

void validate(const XStateParams& p) {
  constexpr double tol = 1e-12;
  const double diag[] = {p.rho11, p.rho22, p.rho33, p.rho44};
  double sum = 0;
  for (double d : diag) {
    if (!std::isfinite(d) || d < -tol) {
      throw InvariantError("positive semidefinite", "X-state diagonal entry " + std::to_string(d));
    }
    sum += d;
  }
  if (std::abs(sum - 1) > tol) {
    throw InvariantError("unit trace", "X-state diagonal sums to " + std::to_string(sum));
  }
  if (p.rho22 * p.rho33 < std::norm(p.rho23) - tol) {
    throw InvariantError("positive semidefinite", "rho22 rho33 < |rho23|^2");
  }
  if (p.rho11 * p.rho44 < std::norm(p.rho14) - tol) {
    throw InvariantError("positive semidefinite", "rho11 rho44 < |rho14|^2");
  }
}

DensityMatrix x_state(const XStateParams& p) {
  validate(p);
  ComplexMatrix m = diagonal_state(p.rho11, p.rho22, p.rho33, p.rho44);
  m(0, 3) = p.rho14;
  m(3, 0) = std::conj(p.rho14);
  m(1, 2) = p.rho23;
  m(2, 1) = std::conj(p.rho23);
  return DensityMatrix(std::move(m), {2, 2});
}

MomentPair x_state_moments(const XStateParams& p) {
  const double a = p.rho11, b = p.rho22, c = p.rho33, d = p.rho44;
  const double c23 = std::norm(p.rho23);
  const double c14 = std::norm(p.rho14);
  return {a * a + b * b + c * c + d * d + 2 * c23 + 2 * c14,
          a * a * a + b * b * b + c * c * c + d * d * d + 3 * (a + d) * c23 + 3 * (b + c) * c14};
}

XStateParams sample_x_state(Rng& rng) {
  constexpr double kMinExponent = 0.05;
  const double alpha = std::pow(kMinExponent, rng.uniform());
  double g[4];
  double total = 0;
  do {
    total = 0;
    for (double& x : g) total += (x = rng.gamma(alpha));
  } while (!(total > 0));

  XStateParams p;
  p.rho11 = g[0] / total;
  p.rho22 = g[1] / total;
  p.rho33 = g[2] / total;
  p.rho44 = g[3] / total;

  const double bias = std::pow(kMinExponent, rng.uniform());
  const double m14 = std::sqrt(p.rho11 * p.rho44) * std::pow(rng.uniform(), bias);
  const double m23 = std::sqrt(p.rho22 * p.rho33) * std::pow(rng.uniform(), bias);
  p.rho14 = std::polar(m14, 2 * std::numbers::pi * rng.uniform());
  p.rho23 = std::polar(m23, 2 * std::numbers::pi * rng.uniform());
  return p;
}

// --- GHZ/W mixtures -----------------------------------------------------------

ComplexVector ghz_ket(int n) {
  require_qubits(n, kMaxQubits, "ghz_ket");
  ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << n);
  v(0) = kInvSqrt2;
  v(v.size() - 1) = kInvSqrt2;
  return v;
}

ComplexVector w_ket(int n) {
  require_qubits(n, kMaxQubits, "w_ket");
  ComplexVector v = ComplexVector::Zero(Eigen::Index{1} << n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) v(Eigen::Index{1} << k) = amp;
  return v;
}

DensityMatrix ghzw_full_state(const GHZWParams& p) {
  require_ghzw(p, "ghzw_full_state");
  require_qubits(p.n, kMaxQubits, "ghzw_full_state");
  const double w[] = {p.lambda, 1 - p.lambda};
  const ComplexVector kets[] = {ghz_ket(p.n), w_ket(p.n)};
  return DensityMatrix::mixture(w, kets, Dims(static_cast<std::size_t>(p.n), 2));
}

DensityMatrix ghzw_reduced(const GHZWParams& p) {
  require_ghzw(p, "ghzw_reduced");
  const double n = p.n;
  const double l = p.lambda;
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = l / 2 + (1 - l) * (n - 2) / n;
  m(3, 3) = l / 2;
  const double c = (1 - l) / n;
  m(1, 1) = c;
  m(1, 2) = c;
  m(2, 1) = c;
  m(2, 2) = c;
  return DensityMatrix(std::move(m), {2, 2});
}

DensityMatrix ghzw_direct_reduced(const GHZWParams& p) {
  DensityMatrix full = ghzw_full_state(p);
  if (p.n == 2) return full;
  return partial_trace(full, {0, 1});
}

Spectrum ghzw_pt_spectrum(const GHZWParams& p) {
  require_ghzw(p, "ghzw_pt_spectrum");
  const double n = p.n;
  const double r = 1 - p.lambda;
  const double root = std::sqrt(p.delta());
  RealVector x(4);
  x << r / n, r / n, 0.5 + r * (root - 2) / (2 * n), 0.5 - r * (root + 2) / (2 * n);
  return Spectrum(std::move(x));
}

double ghzw_entanglement_threshold(int n) {
  if (n < 2) throw DomainError("ghzw_entanglement_threshold: n must be >= 2");
  // 1 - n/(sqrt(delta) + 2), rewritten without cancellation; gives 1/2 at n = 2.
  const double dn = n;
  const double root = std::sqrt(dn * dn - 4 * dn + 8);
  return 4 / ((root + dn - 2) * (root + 2));
}

MomentPair ghzw_moments(const GHZWParams& p) {
  require_ghzw(p, "ghzw_moments");
  const double n = p.n;
  const double l = p.lambda;
  const double p2 = (p.h(4, 16) * l * l - 2 * p.h(6, 16) * l + 2 * p.h(4, 8)) / (2 * n * n);
  const double p3 = (6 * p.h(4, 8) * l * l * l + 3 * (n - 4) * p.h(6, 12) * l * l -
                     6 * (n - 2) * p.h(6, 12) * l + 4 * (n * p.h(6, 15) - 12)) /
                    (4 * n * n * n);
  return {p2, p3};
}

}  // namespace ptm
