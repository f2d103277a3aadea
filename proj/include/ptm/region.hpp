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

#include <string_view>

#include "ptm/curves.hpp"
#include "ptm/qstate.hpp"

namespace ptm {

enum class RegionLabel { Separable, Entangled, Infeasible };

std::string_view to_string(RegionLabel label);

struct RegionVerdict {
  RegionLabel label = RegionLabel::Infeasible;
  bool on_phi4_boundary = false;   // within eps of phi4
  bool on_outer_boundary = false;  // within eps of Phi4+ or Phi4-
};

struct RegionConfig {
  double eps_boundary = kBoundaryEps;
};

/// Separable iff p3 >= phi4(p2) - eps inside the band [Phi4-, Phi4+]; pairs on
/// the border count as separable. Throws DomainError on NaN.
RegionVerdict classify_pair(double p2, double p3, RegionConfig cfg = {});

/// classify_pair on the moments of a two-qubit state (dims {2, 2}).
RegionVerdict classify_state(const DensityMatrix& rho, RegionConfig cfg = {});

struct RegionAreas {
  double separable = 0;
  double entangled = 0;
};

/// Composite Simpson over [1/4, 1/3], [1/3, 1/2], [1/2, 1], where phi4 is smooth.
RegionAreas region_areas(int panels_per_piece = 1 << 16);

// ---------------------------------------------------------------------------
// Constrained extremization of f = x^3 + y^3 + z^3 + (1-s)^3 over
// x + y + z = s, x^2 + y^2 + z^2 + (1-s)^2 = t, x, y, z >= 0, where t = p2 and
// s is the sum of the three largest PT eigenvalues.

enum class AppendixRegion { R1, R2, R3, Outside };

std::string_view to_string(AppendixRegion region);

struct AppendixPoint {
  double t = 0;
  double s = 0;
  AppendixRegion region = AppendixRegion::Outside;
};

/// s at which the plane x + y + z = s is tangent to the sphere: (3 + sqrt(3(4t-1)))/4.
double appendix_tangency_s(double t);
/// Upper s of R3: (2 + sqrt(2(3t-1)))/3.
double appendix_touching_s(double t);

AppendixPoint appendix_region(double t, double s);

struct AppendixBounds {
  double f_min = 0;  // m(t, s)
  double f_max = 0;  // M(t, s)
};

/// Closed-form m(t,s) and M(t,s). Throws DomainError outside R1 u R2 u R3.
AppendixBounds appendix_bounds(double t, double s);

struct Envelope {
  double upper = 0;  // min{max_s M, max_s m}, equals phi4(t)
  double lower = 0;  // max{min_s M, min_s m}, equals Phi4-(t)
};

/// Eliminates s from the appendix bounds; t in (1/3, 1].
Envelope boundary_envelope(double t);

}  // namespace ptm
