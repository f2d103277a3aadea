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

// Boundary curves of the (p2, p3) moment region of two-qubit states, plus the
// generic-dimension envelopes they specialize.
//
//   Phi4+(p2)  upper edge of the whole region
//   Phi4-(p2)  lower edge of the whole region (Werner states)
//   phi4(p2)   separable/entangled border; equals Phi4- on [1/4, 1/3]
//   Phi4B(p2)  upper edge for Bell-diagonal states
//
// All d = 4 curves accept p2 in [1/4, 1], widened by kBoundaryEps and clamped.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>

#include "ptm/error.hpp"

namespace ptm {

inline constexpr double kBoundaryEps = 1e-9;

namespace detail {

template <std::floating_point Real>
Real clamp_argument(Real x, Real lo, Real hi, const char* who) {
  if (std::isnan(x)) throw DomainError(std::string(who) + ": NaN argument");
  const Real eps = static_cast<Real>(kBoundaryEps);
  if (x < lo - eps || x > hi + eps) {
    throw DomainError(std::string(who) + ": argument " + std::to_string(static_cast<double>(x)) +
                      " outside [" + std::to_string(static_cast<double>(lo)) + ", " +
                      std::to_string(static_cast<double>(hi)) + "]");
  }
  return std::clamp(x, lo, hi);
}

template <std::floating_point Real>
Real pow_three_halves(Real u) {
  u = std::max(u, Real(0));
  return u * std::sqrt(u);
}

template <std::floating_point Real>
Real third() { return Real(1) / Real(3); }

// Branch formulas without range handling; callers select the interval.
template <std::floating_point Real>
Real phi4_plus_formula(Real p2) {
  return (Real(3) * (Real(6) * p2 - 1) + std::sqrt(Real(3)) * pow_three_halves(Real(4) * p2 - 1)) /
         Real(24);
}
template <std::floating_point Real>
Real phi4_minus_formula(Real p2) {
  return (Real(3) * (Real(6) * p2 - 1) - std::sqrt(Real(3)) * pow_three_halves(Real(4) * p2 - 1)) /
         Real(24);
}
template <std::floating_point Real>
Real phi4_mid_formula(Real p2) {
  return (Real(2) * (Real(9) * p2 - 2) - std::sqrt(Real(2)) * pow_three_halves(Real(3) * p2 - 1)) /
         Real(18);
}
template <std::floating_point Real>
Real phi4_high_formula(Real p2) {
  return (Real(3) * p2 - 1) / Real(2);
}
template <std::floating_point Real>
Real phi4_bell_mid_formula(Real p2) {
  return ((Real(18) * p2 - 1) + Real(2) * std::sqrt(Real(2)) * pow_three_halves(Real(3) * p2 - 1)) /
         Real(36);
}

}  // namespace detail

/// Phi_d^+(q2) = (d-1) y^3 + [1 - (d-1) y]^3 with
/// y = (d-1 - sqrt((d-1)(d q2 - 1))) / (d(d-1)); q2 in [1/d, 1].
template <std::floating_point Real>
Real phi_plus_d(Real q2, int d) {
  if (d < 2) throw DomainError("phi_plus_d: d must be >= 2");
  const Real dd = static_cast<Real>(d);
  q2 = detail::clamp_argument(q2, Real(1) / dd, Real(1), "phi_plus_d");
  const Real y = (dd - 1 - std::sqrt(std::max(Real(0), (dd - 1) * (dd * q2 - 1)))) / (dd * (dd - 1));
  const Real rest = 1 - (dd - 1) * y;
  return (dd - 1) * y * y * y + rest * rest * rest;
}

/// phi_d(q2) = tau x^3 + (1 - tau x)^3 with tau = floor(1/q2) and
/// x = (tau + sqrt(tau((tau+1) q2 - 1))) / (tau(tau+1)); q2 in [1/d, 1].
template <std::floating_point Real>
Real phi_lower_d(Real q2, int d) {
  if (d < 2) throw DomainError("phi_lower_d: d must be >= 2");
  const Real dd = static_cast<Real>(d);
  q2 = detail::clamp_argument(q2, Real(1) / dd, Real(1), "phi_lower_d");
  const Real tau = std::min(std::floor(Real(1) / q2), dd);
  const Real x =
      (tau + std::sqrt(std::max(Real(0), tau * ((tau + 1) * q2 - 1)))) / (tau * (tau + 1));
  const Real rest = 1 - tau * x;
  return tau * x * x * x + rest * rest * rest;
}

template <std::floating_point Real>
Real phi4_plus(Real p2) {
  return detail::phi4_plus_formula(detail::clamp_argument(p2, Real(0.25), Real(1), "phi4_plus"));
}

template <std::floating_point Real>
Real phi4_minus(Real p2) {
  return detail::phi4_minus_formula(detail::clamp_argument(p2, Real(0.25), Real(1), "phi4_minus"));
}

/// Three branches, breakpoints 1/3 and 1/2; continuous.
template <std::floating_point Real>
Real phi4_piecewise(Real p2) {
  p2 = detail::clamp_argument(p2, Real(0.25), Real(1), "phi4_piecewise");
  if (p2 >= Real(0.5)) return detail::phi4_high_formula(p2);
  if (p2 >= detail::third<Real>()) return detail::phi4_mid_formula(p2);
  return detail::phi4_minus_formula(p2);
}

template <std::floating_point Real>
Real phi4_bell(Real p2) {
  p2 = detail::clamp_argument(p2, Real(0.25), Real(1), "phi4_bell");
  if (p2 >= Real(0.5)) return Real(0.25);
  if (p2 >= detail::third<Real>()) return detail::phi4_bell_mid_formula(p2);
  return detail::phi4_plus_formula(p2);
}

}  // namespace ptm
