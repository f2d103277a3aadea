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
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "ptm/ptmoments.hpp"
#include "ptm/qstate.hpp"
#include "ptm/random.hpp"
#include "ptm/region.hpp"

namespace ptm {

struct OracleConfig {
  int angle_resolution = 100000;  // points per circle scan
  int grid_resolution = 400;      // points per sphere-grid axis
  std::uint64_t seed = 42;
  std::size_t sample_count = 100000;

  /// Throws DomainError unless resolutions >= 10 and sample_count >= 1.
  void validate() const;
};

using Point3 = std::array<double, 3>;

struct OracleResult {
  double value_min = 0;
  double value_max = 0;
  Point3 argmin{};
  Point3 argmax{};
  double error_bound = 0;  // > 0; every feasible value lies within this of the scan
};

/// Brute-force min/max of f = x^3 + y^3 + z^3 + (1-s)^3 on the feasible arc of
/// the circle {x+y+z = s} n {x^2+y^2+z^2 = t-(1-s)^2} in the first octant.
/// Besides the uniform angle grid, the exact intersections with the coordinate
/// planes are evaluated, so arc endpoints and isolated points are never missed.
OracleResult oracle_appendix_a(double t, double s, const OracleConfig& cfg = {});

/// Brute-force max (and min) of g = t1 t2 t3 over the sphere |t|^2 = 4 p2 - 1
/// intersected with the Bell tetrahedron: sphere grid plus the four face circles
/// plus the face-pair corners.
OracleResult oracle_appendix_b(double p2, const OracleConfig& cfg = {});

/// One Hilbert-Schmidt random two-qubit state GG^dagger / Tr(GG^dagger).
DensityMatrix sample_hs_state(Rng& rng);

/// State i is sample_hs_state on the stream for_each_seeded assigns to i.
std::vector<DensityMatrix> sample_hs_random(std::size_t count, std::uint64_t seed);

enum class Ensemble { HilbertSchmidt, BellDiagonal, XState };

std::string_view to_string(Ensemble e);
/// Accepts "hs", "bell", "xstate"; throws DomainError otherwise.
Ensemble ensemble_from_string(std::string_view name);

/// Calls fn(i, rho) for count states of the ensemble, deterministic per seed.
void for_each_ensemble_state(Ensemble e, std::size_t count, std::uint64_t seed,
                             const std::function<void(std::size_t, const DensityMatrix&)>& fn);

/// States whose p3 lies within this distance of phi4(p2) are excluded from the
/// classifier-vs-PPT comparison.
inline constexpr double kBorderExclusion = 1e-9;

struct Disagreement {
  std::size_t index = 0;
  double p2 = 0;
  double p3 = 0;
  double min_pt_eigenvalue = 0;
  RegionLabel label = RegionLabel::Infeasible;
};

struct ConsistencyReport {
  Ensemble ensemble = Ensemble::HilbertSchmidt;
  std::size_t count = 0;
  std::size_t excluded = 0;    // within kBorderExclusion of phi4
  std::size_t infeasible = 0;  // classified Infeasible (never expected)
  std::size_t bell_mismatches = 0;  // bell_is_separable disagreeing with PPT
  std::size_t false_entangled = 0;   // labeled Entangled, but PPT
  std::size_t missed_entangled = 0;  // labeled Separable, but NPT
  std::vector<Disagreement> disagreements;

  /// Zero disagreements in either direction.
  bool pass() const { return disagreements.empty() && infeasible == 0 && bell_mismatches == 0; }
  /// Every Entangled label is confirmed by the PPT test (p3 < phi4 => NPT).
  bool sound() const { return false_entangled == 0 && infeasible == 0 && bell_mismatches == 0; }
};

/// Compares classify_state against ppt_report(...).is_npt on each sample.
ConsistencyReport consistency_harness(Ensemble e, std::size_t count, std::uint64_t seed);

}  // namespace ptm
