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

#include <vector>

#include "ptm/qstate.hpp"

namespace ptm {

/// p_k = Tr[(rho^Gamma)^k], k = 1..4
struct PTMomentVector {
  double p1 = 0;
  double p2 = 0;
  double p3 = 0;
  double p4 = 0;
};

inline constexpr double kNptTolerance = 1e-10;

struct PPTReport {
  double min_pt_eigenvalue = 0;
  double negativity = 0;   // sum of |x| over the negative PT eigenvalues
  bool is_npt = false;     // min_pt_eigenvalue < -tolerance
  bool near_zero = false;  // min_pt_eigenvalue in [-tolerance, 0): reported PPT, flagged
  Spectrum pt_spectrum;
};

/// Trace of powers of the partial transpose (over the second factor); no
/// eigendecomposition. Requires exactly two subsystems.
PTMomentVector moments_by_trace(const DensityMatrix& rho);

/// Power sums sum_i x_i^k for k = 1..max_k.
std::vector<double> moments_by_spectrum(const Spectrum& spectrum, int max_k);

/// Eigendecomposes rho^Gamma and applies the PPT test.
PPTReport ppt_report(const DensityMatrix& rho, double tolerance = kNptTolerance);

}  // namespace ptm
