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

#include <cmath>

#include "ptm/curves.hpp"
#include "ptm/error.hpp"
#include "ptm/families.hpp"
#include "ptm/region.hpp"
#include "support.hpp"

namespace ptm {
namespace {

const double kSqrt3 = std::sqrt(3.0);

// Values below were computed independently (exact arithmetic where possible,
// otherwise double-precision evaluation of the closed forms) and are frozen.

TEST(Curves, GenericDimension) {
  for (int d : {2, 3, 4, 7}) {
    EXPECT_NEAR(phi_plus_d(1.0, d), 1.0, 1e-15);
    EXPECT_NEAR(phi_plus_d(1.0 / d, d), 1.0 / (d * d), 1e-15);
    EXPECT_NEAR(phi_lower_d(1.0, d), 1.0, 1e-15);
  }
  EXPECT_NEAR(phi_plus_d(0.5, 4), (6 + kSqrt3) / 24, 1e-15);
  EXPECT_NEAR(phi_lower_d(0.5, 4), 0.25, 1e-15);
  EXPECT_NEAR(phi_lower_d(1.0 / 3.0, 4), 1.0 / 9.0, 1e-15);
  EXPECT_THROW(phi_plus_d(0.5, 1), DomainError);
}

TEST(Curves, FourDimensionalMatchesGeneric) {
  for (int i = 0; i <= 1000; ++i) {
    const double p = 0.25 + 0.75 * i / 1000.0;
    EXPECT_NEAR(phi4_plus(p), phi_plus_d(p, 4), 1e-13) << p;
    EXPECT_NEAR(phi4_piecewise(p), phi_lower_d(p, 4), 1e-13) << p;
  }
}

TEST(Curves, FrozenValues) {
  EXPECT_NEAR(phi4_piecewise(0.5), 0.25, 1e-15);
  EXPECT_NEAR(phi4_piecewise(0.25), 1.0 / 16, 1e-15);
  EXPECT_NEAR(phi4_piecewise(0.4375), 0.20155261432218585, 1e-15);
  EXPECT_NEAR(phi4_piecewise(0.35), 0.12689936731661988, 1e-15);
  EXPECT_NEAR(phi4_minus(1.0), 0.25, 1e-15);
  EXPECT_NEAR(phi4_minus(7.0 / 16), 5.0 / 32, 1e-15);
  EXPECT_NEAR(phi4_minus(0.25), 1.0 / 16, 1e-15);
  EXPECT_NEAR(phi4_minus(0.5), 0.1778312163512968, 1e-15);
  EXPECT_NEAR(phi4_plus(0.5), 0.3221687836487032, 1e-15);
  EXPECT_NEAR(phi4_plus(0.3), 0.106454972243679, 1e-15);
  EXPECT_NEAR(phi4_bell(1.0 / 3.0), 5.0 / 36, 1e-15);
  EXPECT_NEAR(phi4_bell(0.75), 0.25, 1e-15);
  EXPECT_NEAR(phi4_bell(0.4), 0.1792495059114853, 1e-15);
}

TEST(Curves, ArgumentChecks) {
  EXPECT_THROW(phi4_plus(0.2), DomainError);
  EXPECT_THROW(phi4_piecewise(1.1), DomainError);
  EXPECT_THROW(phi4_bell(std::nan("")), DomainError);
  // Within kBoundaryEps the argument is clamped.
  EXPECT_NEAR(phi4_minus(1 + 1e-12), 0.25, 1e-15);
}

TEST(Curves, TemplatedOnScalar) {
  EXPECT_NEAR(phi4_piecewise(0.4375f), 0.2015526f, 1e-6f);
  EXPECT_NEAR(static_cast<double>(phi4_plus(0.5L)), (6 + kSqrt3) / 24, 1e-15);
}

// Property: the band ordering and continuity at the breakpoints.
TEST(CurvesProperty, BandOrdering) {
  for (int i = 0; i <= 100000; ++i) {
    const double p = 0.25 + 0.75 * i / 100000.0;
    const double lo = phi4_minus(p), mid = phi4_piecewise(p), hi = phi4_plus(p),
                 bell = phi4_bell(p);
    ASSERT_GE(mid - lo, -1e-12) << p;
    ASSERT_GE(hi - mid, -1e-12) << p;
    ASSERT_GE(bell - lo, -1e-12) << p;
    ASSERT_GE(hi - bell, -1e-12) << p;
    if (p <= 1.0 / 3.0) ASSERT_NEAR(lo, mid, 1e-12) << p;
  }
  for (double b : {1.0 / 3.0, 0.5}) {
    EXPECT_NEAR(phi4_piecewise(std::nextafter(b, 0.0)), phi4_piecewise(b), 1e-12);
    EXPECT_NEAR(phi4_bell(std::nextafter(b, 0.0)), phi4_bell(b), 1e-12);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_pair(0.25, 1.0 / 16).label, RegionLabel::Separable);
  EXPECT_EQ(classify_pair(1.0, 0.25).label, RegionLabel::Entangled);
  EXPECT_EQ(classify_pair(0.3, 0.2).label, RegionLabel::Infeasible);
  EXPECT_EQ(classify_pair(0.2, 0.05).label, RegionLabel::Infeasible);
  EXPECT_EQ(classify_pair(0.5, 0.1).label, RegionLabel::Infeasible);
  EXPECT_THROW(classify_pair(std::nan(""), 0.1), DomainError);
}

TEST(Classify, BorderCountsAsSeparable) {
  const RegionVerdict v = classify_pair(0.5, 0.25);
  EXPECT_EQ(v.label, RegionLabel::Separable);
  EXPECT_TRUE(v.on_phi4_boundary);
  EXPECT_FALSE(v.on_outer_boundary);

  const double p = 0.6;
  EXPECT_EQ(classify_pair(p, phi4_piecewise(p) - 5e-10).label, RegionLabel::Separable);
  EXPECT_EQ(classify_pair(p, phi4_piecewise(p) - 2e-9).label, RegionLabel::Entangled);
  EXPECT_EQ(classify_pair(p, phi4_piecewise(p) - 2e-9, {1e-8}).label, RegionLabel::Separable);

  const RegionVerdict outer = classify_pair(1.0, 1.0);
  EXPECT_TRUE(outer.on_outer_boundary);
  EXPECT_TRUE(outer.on_phi4_boundary);
}

TEST(Classify, States) {
  EXPECT_EQ(classify_state(werner_state({0.5})).label, RegionLabel::Entangled);
  EXPECT_EQ(classify_state(werner_state({0.2})).label, RegionLabel::Separable);
  const RegionVerdict b = classify_state(bell_state({1, 0, 0}));
  EXPECT_EQ(b.label, RegionLabel::Separable);
  EXPECT_TRUE(b.on_phi4_boundary);
  EXPECT_THROW(classify_state(DensityMatrix::maximally_mixed({4})), DomainError);
}

// Property: an Entangled verdict is always confirmed by the PPT test, and every
// valid state is feasible. (The converse fails: NPT states with p3 >= phi4
// exist, see ClassifyProperty.SeparableVerdictDoesNotImplyPPT.)
TEST(ClassifyProperty, EntangledVerdictImpliesNPT) {
  Rng rng(41, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const DensityMatrix rho = testing::random_state(rng, {2, 2}, 1 + trial % 4);
    const RegionVerdict v = classify_state(rho);
    ASSERT_NE(v.label, RegionLabel::Infeasible);
    if (v.label == RegionLabel::Entangled) {
      ASSERT_TRUE(ppt_report(rho).is_npt);
    }
  }
}

TEST(ClassifyProperty, SeparableStatesAreSeparable) {
  Rng rng(42, 0);
  for (int trial = 0; trial < 500; ++trial) {
    const DensityMatrix rho = testing::random_separable_state(rng, 1 + trial % 5);
    ASSERT_EQ(classify_state(rho).label, RegionLabel::Separable);
  }
}

TEST(ClassifyProperty, SeparableVerdictDoesNotImplyPPT) {
  // diag(0.4, 0, 0.5, 0.1) with rho14 = 0.1: (p2, p3) = (0.44, 0.205) lies
  // above phi4(0.44) = 0.20355..., yet the partial transpose has the negative
  // eigenvalue 1/4 - sqrt(0.0725).
  XStateParams x;
  x.rho11 = 0.4;
  x.rho33 = 0.5;
  x.rho44 = 0.1;
  x.rho14 = 0.1;
  const DensityMatrix rho = x_state(x);
  const PTMomentVector m = moments_by_trace(rho);
  EXPECT_NEAR(m.p2, 0.44, 1e-15);
  EXPECT_NEAR(m.p3, 0.205, 1e-15);
  EXPECT_EQ(classify_state(rho).label, RegionLabel::Separable);
  EXPECT_NEAR(ppt_report(rho).min_pt_eigenvalue, 0.25 - std::sqrt(0.0725), 1e-14);
}

TEST(Areas, MatchClosedForm) {
  const RegionAreas a = region_areas();
  EXPECT_NEAR(a.separable, 43.0 / 2160, 1e-9);
  EXPECT_NEAR(a.entangled, 443.0 / 2160, 1e-9);
  // Whole band: integral of (sqrt3/12)(4p-1)^{3/2} over [1/4, 1] = 0.225.
  EXPECT_NEAR(a.separable + a.entangled, 0.225, 1e-12);
}

TEST(Appendix, Regions) {
  EXPECT_EQ(appendix_region(0.4, 1.0).region, AppendixRegion::R1);
  EXPECT_EQ(appendix_region(0.8, 1.05).region, AppendixRegion::R3);
  EXPECT_EQ(appendix_region(0.8, 1.3).region, AppendixRegion::R2);
  EXPECT_EQ(appendix_region(0.3, 1.4).region, AppendixRegion::Outside);
  EXPECT_EQ(appendix_region(0.5, 1.0).region, AppendixRegion::Outside);
  EXPECT_EQ(appendix_region(1.0 / 3.0, 1.0).region, AppendixRegion::R1);
  EXPECT_EQ(appendix_region(0.6, 0.99).region, AppendixRegion::Outside);
  EXPECT_NEAR(appendix_tangency_s(0.4), 1.0854101966249685, 1e-15);
  EXPECT_NEAR(appendix_tangency_s(0.3), 0.9436491673103709, 1e-15);
  EXPECT_NEAR(appendix_touching_s(0.8), 1.2244400176893837, 1e-15);
}

TEST(Appendix, Bounds) {
  const AppendixBounds a = appendix_bounds(0.4, 1.0);
  EXPECT_NEAR(a.f_max, 0.184805061467041, 1e-14);
  EXPECT_NEAR(a.f_min, 0.17075049408851484, 1e-14);
  EXPECT_NEAR(appendix_bounds(0.8, 1.0).f_min, 0.7, 1e-14);
  EXPECT_NEAR(appendix_bounds(0.8, 1.05).f_min, 0.677125, 1e-14);
  EXPECT_NEAR(appendix_bounds(0.8, 1.05).f_max, 0.6951137118968312, 1e-14);
  EXPECT_THROW(appendix_bounds(0.3, 1.4), DomainError);
}

TEST(AppendixProperty, TangencyCollapsesToPhiMinus) {
  for (int i = 0; i <= 200; ++i) {
    const double t = 1.0 / 3.0 + (2.0 / 3.0) * i / 200;
    const AppendixBounds b = appendix_bounds(t, appendix_tangency_s(t));
    EXPECT_NEAR(b.f_min, phi4_minus(t), 1e-12) << t;
    EXPECT_NEAR(b.f_max, phi4_minus(t), 1e-12) << t;
  }
}

TEST(AppendixProperty, BoundsAreOrderedInsideTheBand) {
  Rng rng(43, 0);
  int checked = 0;
  while (checked < 5000) {
    const double t = testing::uniform(rng, 1.0 / 3.0, 1.0);
    const double s = testing::uniform(rng, 1.0, appendix_tangency_s(t));
    if (appendix_region(t, s).region == AppendixRegion::Outside) continue;
    ++checked;
    const AppendixBounds b = appendix_bounds(t, s);
    ASSERT_LE(b.f_min, b.f_max + 1e-14);
    ASSERT_GE(b.f_min, phi4_minus(t) - 1e-12);
    ASSERT_LE(b.f_max, phi4_plus(t) + 1e-12);
  }
}

TEST(Envelope, MatchesCurves) {
  const Envelope one = boundary_envelope(1.0);
  EXPECT_NEAR(one.upper, 1.0, 1e-12);
  EXPECT_NEAR(one.lower, 0.25, 1e-12);
  const Envelope half = boundary_envelope(0.5);
  EXPECT_NEAR(half.upper, 0.25, 1e-12);
  EXPECT_NEAR(half.lower, (6 - kSqrt3) / 24, 1e-12);
  EXPECT_NEAR(boundary_envelope(0.35).upper, 0.12689936731661988, 1e-12);
  for (int i = 1; i <= 1000; ++i) {
    const double t = 1.0 / 3.0 + (2.0 / 3.0) * i / 1000;
    const Envelope e = boundary_envelope(t);
    EXPECT_NEAR(e.upper, phi4_piecewise(t), 1e-12) << t;
    EXPECT_NEAR(e.lower, phi4_minus(t), 1e-12) << t;
  }
  EXPECT_THROW(boundary_envelope(1.0 / 3.0), DomainError);
  EXPECT_THROW(boundary_envelope(1.2), DomainError);
}

}  // namespace
}  // namespace ptm
