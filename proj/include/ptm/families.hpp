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

#include <array>
#include <complex>
#include <string_view>

#include "ptm/ptmoments.hpp"
#include "ptm/qstate.hpp"
#include "ptm/random.hpp"

namespace ptm {

// Computational basis order |00>, |01>, |10>, |11>; the first qubit is the most
// significant bit.

ComplexVector bell_phi_plus();   // (|00> + |11>)/sqrt2
ComplexVector bell_phi_minus();  // (|00> - |11>)/sqrt2
ComplexVector bell_psi_plus();   // (|01> + |10>)/sqrt2
ComplexVector bell_psi_minus();  // (|01> - |10>)/sqrt2

/// sigma_1, sigma_2, sigma_3 with sigma_2 = i|0><1| - i|1><0|.
const std::array<ComplexMatrix, 3>& pauli_matrices();

struct MomentPair {
  double p2 = 0;
  double p3 = 0;
};

// --- Werner states: w |psi-><psi-| + (1 - w) I/4 ---------------------------

struct WernerParam {
  double w = 0;
};

DensityMatrix werner_state(WernerParam p);
MomentPair werner_moments(WernerParam p);

// --- Bell-diagonal states: (I + sum_i t_i sigma_i (x) sigma_i)/4 -----------

struct BellVector {
  double t1 = 0;
  double t2 = 0;
  double t3 = 0;
};

/// Membership in the tetrahedron of valid correlation triples.
bool in_bell_tetrahedron(const BellVector& v, double slack = 1e-12);
DensityMatrix bell_state(const BellVector& v);
/// |t1| + |t2| + |t3| <= 1
bool bell_is_separable(const BellVector& v);
/// PT eigenvalues in closed form, sorted descending.
Spectrum bell_pt_spectrum(const BellVector& v);

struct BellMoments {
  double p2 = 0;
  double p3 = 0;
  double p4 = 0;
  double negativity = 0;
};

BellMoments bell_moments(const BellVector& v);

/// Rejection sampling from the cube [-1, 1]^3.
BellVector sample_bell_vector(Rng& rng);

// --- Boundary families ------------------------------------------------------

enum class BoundaryCurve {
  PhiPlus,        // lambda in [0, 1/4]: diag(l, l, l, 1 - 3l), on Phi4+
  Phi4High,       // lambda in [0, 1]: diag(l, 1 - l, 0, 0), on phi4 for p2 >= 1/2
  Phi4Mid,        // lambda in [1/3, 1/2]: diag(l, l, 1 - 2l, 0), on phi4 for p2 in [1/3, 1/2]
  Phi4LowWerner,  // w in [0, 1/3]: separable Werner, on phi4 for p2 <= 1/3
  WernerLowest,   // w in [0, 1]: Werner, on Phi4-
  BellQuarter,    // t in [0, 1]: t|phi+><phi+| + (1-t)|phi-><phi-|, p3 = 1/4
  BellMid,        // t in [0, 1/3]: Bell vector (t, t, 1 - 2t), on Phi4B for p2 in [1/3, 1/2]
  BellLow,        // t in [0, 1/3]: Bell vector (t, t, t), on Phi4B for p2 <= 1/3
};

std::string_view to_string(BoundaryCurve curve);
/// Inverse of to_string; throws DomainError for unknown names.
BoundaryCurve boundary_curve_from_string(std::string_view name);

struct ParamRange {
  double lo = 0;
  double hi = 0;
};
ParamRange boundary_param_range(BoundaryCurve curve);

DensityMatrix boundary_state(BoundaryCurve curve, double param);
/// Value of the curve the family traces, evaluated at the family's own p2.
double boundary_curve_value(BoundaryCurve curve, double p2);

// --- X-states ---------------------------------------------------------------

struct XStateParams {
  double rho11 = 0;
  double rho22 = 0;
  double rho33 = 0;
  double rho44 = 0;
  std::complex<double> rho14 = 0;
  std::complex<double> rho23 = 0;
};

/// Throws InvariantError on trace or positivity violation.
void validate(const XStateParams& p);
DensityMatrix x_state(const XStateParams& p);
MomentPair x_state_moments(const XStateParams& p);

/// Diagonal from a symmetric Dirichlet whose concentration is drawn per sample
/// (log-uniform in [0.05, 1]); coherences |rho14| = sqrt(rho11 rho44) u^b and
/// |rho23| likewise with b log-uniform in [0.05, 1]; phases uniform.
XStateParams sample_x_state(Rng& rng);

// --- GHZ/W mixtures: lambda |GHZ_n><GHZ_n| + (1 - lambda) |W_n><W_n| --------

inline constexpr int kMaxQubits = 12;

struct GHZWParams {
  int n = 3;
  double lambda = 0;

  /// n^2 - 4n + 8
  double delta() const { return static_cast<double>(n) * n - 4.0 * n + 8.0; }
  /// h_{x,y} = n^2 - x n + y
  double h(double x, double y) const { return static_cast<double>(n) * n - x * n + y; }
};

ComplexVector ghz_ket(int n);
ComplexVector w_ket(int n);

DensityMatrix ghzw_full_state(const GHZWParams& p);
/// Closed-form two-qubit marginal. Equals the partial trace of the full state
/// for n >= 3; at n = 2 it drops the GHZ coherence (see ghzw_direct_reduced).
DensityMatrix ghzw_reduced(const GHZWParams& p);
/// Marginal of the first two qubits by explicit construction and partial
/// trace; for n = 2 this is the full state itself.
DensityMatrix ghzw_direct_reduced(const GHZWParams& p);
/// Closed-form PT eigenvalues of ghzw_reduced, sorted descending.
Spectrum ghzw_pt_spectrum(const GHZWParams& p);
/// lambda below which ghzw_reduced is entangled.
double ghzw_entanglement_threshold(int n);
MomentPair ghzw_moments(const GHZWParams& p);

}  // namespace ptm
