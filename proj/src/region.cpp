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

#include "ptm/region.hpp"

#include <cmath>

#include "ptm/ptmoments.hpp"

namespace ptm {
namespace {

constexpr double kThird = 1.0 / 3.0;

template <typename F>
double simpson(F&& f, double a, double b, int panels) {
  if (panels % 2) ++panels;
  const double h = (b - a) / panels;
  double odd = 0, even = 0;
  for (int k = 1; k < panels; ++k) {
    const double v = f(a + k * h);
    (k % 2 ? odd : even) += v;
  }
  return h / 3 * (f(a) + f(b) + 4 * odd + 2 * even);
}

double discriminant(double t, double s) { return -4 * s * s + 6 * s + 3 * t - 3; }

double cubic_part(double t, double s) {
  return -40 * s * s * s + 90 * s * s + 18 * s * t - 72 * s + 18;
}

// Both extremal points (x = y) of the Lagrange system.
double f_at_small_pair(double t, double s) {
  return (cubic_part(t, s) + std::sqrt(2.0) * detail::pow_three_halves(discriminant(t, s))) / 18;
}
double f_at_large_pair(double t, double s) {
  return (cubic_part(t, s) - std::sqrt(2.0) * detail::pow_three_halves(discriminant(t, s))) / 18;
}
// Minimum when the feasible arcs reach a coordinate plane (g = xyz = 0).
double f_on_plane(double t, double s) { return 1.5 * s * (-2 * s * s + 4 * s + t - 3) + 1; }

}  // namespace

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::Separable: return "Separable";
    case RegionLabel::Entangled: return "Entangled";
    case RegionLabel::Infeasible: return "Infeasible";
  }
  return "?";
}

RegionVerdict classify_pair(double p2, double p3, RegionConfig cfg) {
  if (std::isnan(p2) || std::isnan(p3)) throw DomainError("classify_pair: NaN input");
  const double eps = cfg.eps_boundary;
  RegionVerdict v;
  if (!(p2 >= 0.25 - eps && p2 <= 1 + eps)) return v;
  p2 = std::clamp(p2, 0.25, 1.0);

  const double lo = phi4_minus(p2);
  const double hi = phi4_plus(p2);
  if (!(p3 >= lo - eps && p3 <= hi + eps)) return v;

  const double border = phi4_piecewise(p2);
  v.on_phi4_boundary = std::abs(p3 - border) <= eps;
  v.on_outer_boundary = std::abs(p3 - lo) <= eps || std::abs(p3 - hi) <= eps;
  v.label = p3 >= border - eps ? RegionLabel::Separable : RegionLabel::Entangled;
  return v;
}

RegionVerdict classify_state(const DensityMatrix& rho, RegionConfig cfg) {
  if (rho.dims() != Dims{2, 2}) throw DomainError("classify_state: expected a two-qubit state");
  const PTMomentVector m = moments_by_trace(rho);
  return classify_pair(m.p2, m.p3, cfg);
}

RegionAreas region_areas(int panels_per_piece) {
  const double breaks[] = {0.25, kThird, 0.5, 1.0};
  RegionAreas a;
  for (int k = 0; k < 3; ++k) {
    const double lo = breaks[k];
    const double hi = breaks[k + 1];
    a.separable += simpson([](double p) { return phi4_plus(p) - phi4_piecewise(p); }, lo, hi,
                           panels_per_piece);
    a.entangled += simpson([](double p) { return phi4_piecewise(p) - phi4_minus(p); }, lo, hi,
                           panels_per_piece);
  }
  return a;
}

std::string_view to_string(AppendixRegion region) {
  switch (region) {
    case AppendixRegion::R1: return "R1";
    case AppendixRegion::R2: return "R2";
    case AppendixRegion::R3: return "R3";
    case AppendixRegion::Outside: return "Outside";
  }
  return "?";
}

double appendix_tangency_s(double t) {
  return (3 + std::sqrt(std::max(0.0, 3 * (4 * t - 1)))) / 4;
}

double appendix_touching_s(double t) {
  return (2 + std::sqrt(std::max(0.0, 2 * (3 * t - 1)))) / 3;
}

AppendixPoint appendix_region(double t, double s) {
  AppendixPoint p{t, s, AppendixRegion::Outside};
  if (!std::isfinite(t) || !std::isfinite(s) || t < kThird || t > 1) return p;
  const double s_tan = appendix_tangency_s(t);
  if (t < 0.5) {
    if (s >= 1 && s <= s_tan) p.region = AppendixRegion::R1;
    return p;
  }
  const double s_touch = appendix_touching_s(t);
  if (s > s_touch && s <= s_tan) {
    p.region = AppendixRegion::R2;
  } else if (t > 0.5 && s >= 1 && s <= s_touch) {
    p.region = AppendixRegion::R3;
  }
  return p;
}

AppendixBounds appendix_bounds(double t, double s) {
  const AppendixPoint p = appendix_region(t, s);
  if (p.region == AppendixRegion::Outside) {
    throw DomainError("appendix_bounds: (t, s) = (" + std::to_string(t) + ", " +
                      std::to_string(s) + ") lies outside R1 u R2 u R3");
  }
  AppendixBounds b;
  b.f_max = f_at_small_pair(t, s);
  b.f_min = p.region == AppendixRegion::R3 ? f_on_plane(t, s) : f_at_large_pair(t, s);
  return b;
}

Envelope boundary_envelope(double t) {
  if (std::isnan(t) || t <= kThird || t > 1 + kBoundaryEps) {
    throw DomainError("boundary_envelope: t must lie in (1/3, 1]");
  }
  t = std::min(t, 1.0);
  Envelope e;
  // Minima over s sit at the tangency point, where x = y = z.
  const AppendixBounds at_tangency = appendix_bounds(t, appendix_tangency_s(t));
  e.lower = std::max(at_tangency.f_min, at_tangency.f_max);
  // Maxima over s sit at s = 1 (for m on R1 u R2 as the limit s -> 1).
  const double max_big = f_at_small_pair(t, 1.0);
  const double max_small = std::max(f_at_large_pair(t, 1.0), f_on_plane(t, 1.0));
  e.upper = std::min(max_big, max_small);
  return e;
}

}  // namespace ptm
