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

#include "ptm/ptmoments.hpp"

namespace ptm {
namespace {

void require_bipartite(const DensityMatrix& rho, const char* who) {
  if (rho.subsystem_count() != 2) {
    throw DomainError(std::string(who) + ": state must have exactly two subsystems, got " +
                      std::to_string(rho.subsystem_count()));
  }
}

}  // namespace

PTMomentVector moments_by_trace(const DensityMatrix& rho) {
  require_bipartite(rho, "moments_by_trace");
  const ComplexMatrix gamma = partial_transpose(rho, 1);
  const ComplexMatrix g2 = gamma * gamma;
  PTMomentVector out;
  out.p1 = gamma.trace().real();
  out.p2 = g2.trace().real();
  // Tr(AB) = sum_ij A_ij B_ji, avoids forming the third power
  out.p3 = (g2.array() * gamma.transpose().array()).sum().real();
  out.p4 = (g2.array() * g2.transpose().array()).sum().real();
  return out;
}

std::vector<double> moments_by_spectrum(const Spectrum& spectrum, int max_k) {
  if (spectrum.size() == 0) throw DomainError("moments_by_spectrum: empty spectrum");
  if (max_k < 1) throw DomainError("moments_by_spectrum: max_k must be >= 1");
  std::vector<double> out(static_cast<std::size_t>(max_k), 0.0);
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    double power = 1;
    for (int k = 0; k < max_k; ++k) {
      power *= spectrum[i];
      out[static_cast<std::size_t>(k)] += power;
    }
  }
  return out;
}

PPTReport ppt_report(const DensityMatrix& rho, double tolerance) {
  require_bipartite(rho, "ppt_report");
  PPTReport r;
  r.pt_spectrum = eigenvalues_hermitian(partial_transpose(rho, 1));
  r.min_pt_eigenvalue = r.pt_spectrum.min();
  for (Eigen::Index i = 0; i < r.pt_spectrum.size(); ++i) {
    if (r.pt_spectrum[i] < 0) r.negativity -= r.pt_spectrum[i];
  }
  r.is_npt = r.min_pt_eigenvalue < -tolerance;
  r.near_zero = !r.is_npt && r.min_pt_eigenvalue < 0;
  return r;
}

}  // namespace ptm
