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

#include "ptm/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ptm/curves.hpp"
#include "ptm/families.hpp"

namespace ptm {
namespace {

constexpr double kPi = std::numbers::pi;
// Keeps error_bound strictly positive when the feasible set is a single point.
constexpr double kErrorFloor = 1e-14;
constexpr double kFeasibleSlack = 1e-12;

struct Extremes {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  Point3 arglo{};
  Point3 arghi{};
  std::size_t hits = 0;

  void add(const Point3& x, double v) {
    ++hits;
    if (v < lo) {
      lo = v;
      arglo = x;
    }
    if (v > hi) {
      hi = v;
      arghi = x;
    }
  }
};

double dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Point3 cross(const Point3& a, const Point3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Point3 scaled(const Point3& a, double k) { return {a[0] * k, a[1] * k, a[2] * k}; }

Point3 normalized(const Point3& a) { return scaled(a, 1 / std::sqrt(dot(a, a))); }

// Bell tetrahedron faces: 1 + F_k . t >= 0.
constexpr Point3 kFaces[4] = {{-1, -1, -1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};

bool in_tetrahedron(const Point3& x) {
  for (const auto& f : kFaces)
    if (1 + dot(f, x) < -kFeasibleSlack) return false;
  return true;
}

double product(const Point3& x) { return x[0] * x[1] * x[2]; }

// cos/sin of 2 pi k / n, k = 0..n-1; shared across calls with the same n.
struct TrigTable {
  std::vector<double> c, s;
};

const TrigTable& trig_table(int n) {
  thread_local TrigTable table;
  if (static_cast<int>(table.c.size()) != n) {
    table.c.resize(static_cast<std::size_t>(n));
    table.s.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double a = 2 * kPi * k / n;
      table.c[static_cast<std::size_t>(k)] = std::cos(a);
      table.s[static_cast<std::size_t>(k)] = std::sin(a);
    }
  }
  return table;
}

}  // namespace

void OracleConfig::validate() const {
  if (angle_resolution < 10 || grid_resolution < 10) {
    throw DomainError("OracleConfig: resolutions must be >= 10");
  }
  if (sample_count < 1) throw DomainError("OracleConfig: sample_count must be >= 1");
}

OracleResult oracle_appendix_a(double t, double s, const OracleConfig& cfg) {
  cfg.validate();
  if (appendix_region(t, s).region == AppendixRegion::Outside) {
    throw DomainError("oracle_appendix_a: (" + std::to_string(t) + ", " + std::to_string(s) +
                      ") outside R1 u R2 u R3");
  }
  const double r2 = t - (1 - s) * (1 - s) - s * s / 3;
  const double r = std::sqrt(std::max(r2, 0.0));
  const double c = s / 3;
  const Point3 u{1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0};
  const Point3 v{1 / std::sqrt(6.0), 1 / std::sqrt(6.0), -2 / std::sqrt(6.0)};
  const double tail = (1 - s) * (1 - s) * (1 - s);

  Extremes ex;
  auto visit_cs = [&](double ct, double st) {
    Point3 x;
    for (int i = 0; i < 3; ++i) x[i] = c + r * (u[i] * ct + v[i] * st);
    if (x[0] < -kFeasibleSlack || x[1] < -kFeasibleSlack || x[2] < -kFeasibleSlack) return;
    for (double& xi : x) xi = std::max(xi, 0.0);
    ex.add(x, x[0] * x[0] * x[0] + x[1] * x[1] * x[1] + x[2] * x[2] * x[2] + tail);
  };

  auto visit = [&](double theta) { visit_cs(std::cos(theta), std::sin(theta)); };

  const int n = cfg.angle_resolution;
  const TrigTable& trig = trig_table(n);
  for (std::size_t k = 0; k < trig.c.size(); ++k) visit_cs(trig.c[k], trig.s[k]);
  // Where the circle meets x_i = 0: r (u_i cos + v_i sin) = -c.
  for (int i = 0; i < 3; ++i) {
    const double a = r * u[i], b = r * v[i];
    const double amp = std::hypot(a, b);
    if (amp == 0) continue;
    const double q = -c / amp;
    if (std::abs(q) > 1 + 1e-12) continue;
    const double phase = std::atan2(b, a);
    const double w = std::acos(std::clamp(q, -1.0, 1.0));
    visit(phase + w);
    visit(phase - w);
  }
  if (ex.hits == 0) {
    throw DomainError("oracle_appendix_a: empty feasible set at (" + std::to_string(t) + ", " +
                      std::to_string(s) + ")");
  }
  // |grad f| <= 3 * 3 * 1.5^2 on [0, 1.5]^3; arc step 2 pi r / n.
  constexpr double kLipschitz = 20.25;
  return {ex.lo, ex.hi, ex.arglo, ex.arghi, kLipschitz * 2 * kPi * r / n + kErrorFloor};
}

OracleResult oracle_appendix_b(double p2, const OracleConfig& cfg) {
  cfg.validate();
  if (!(p2 >= 0.25 && p2 <= 1)) {
    throw DomainError("oracle_appendix_b: p2 = " + std::to_string(p2) + " outside [1/4, 1]");
  }
  const double r2 = 4 * p2 - 1;
  const double r = std::sqrt(r2);
  Extremes ex;
  auto visit = [&](const Point3& x) {
    if (in_tetrahedron(x)) ex.add(x, product(x));
  };

  const int ng = cfg.grid_resolution;
  for (int i = 0; i < ng; ++i) {
    const double theta = kPi * i / (ng - 1);
    for (int j = 0; j < ng; ++j) {
      const double phi = 2 * kPi * j / ng;
      visit({r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi),
             r * std::cos(theta)});
    }
  }

  // Face circles: plane nhat . t = -1/|F| cut with the sphere.
  const int na = cfg.angle_resolution;
  const TrigTable& trig = trig_table(na);
  for (const auto& f : kFaces) {
    const double norm = std::sqrt(dot(f, f));
    const Point3 nhat = scaled(f, 1 / norm);
    const double d = -1 / norm;
    const double rr2 = r2 - d * d;
    if (rr2 < 0) continue;
    const double rr = std::sqrt(rr2);
    Point3 e1 = cross(nhat, {1, 0, 0});
    if (dot(e1, e1) < 0.01) e1 = cross(nhat, {0, 1, 0});
    e1 = normalized(e1);
    const Point3 e2 = cross(nhat, e1);
    for (std::size_t k = 0; k < trig.c.size(); ++k) {
      const double ca = trig.c[k], sa = trig.s[k];
      Point3 x;
      for (int m = 0; m < 3; ++m) x[m] = d * nhat[m] + rr * (ca * e1[m] + sa * e2[m]);
      visit(x);
    }
  }

  // Corners: two faces and the sphere. With F_a . F_b = -1 and |F|^2 = 3 the
  // line F_a . t = F_b . t = -1 passes through p0 = -(F_a + F_b)/2.
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      Point3 p0;
      for (int m = 0; m < 3; ++m) p0[m] = -(kFaces[a][m] + kFaces[b][m]) / 2;
      const Point3 dir = normalized(cross(kFaces[a], kFaces[b]));
      const double rest = r2 - dot(p0, p0);
      if (rest < 0) continue;
      const double tau = std::sqrt(rest);
      for (double sign : {-1.0, 1.0}) {
        Point3 x;
        for (int m = 0; m < 3; ++m) x[m] = p0[m] + sign * tau * dir[m];
        visit(x);
      }
    }
  }

  if (ex.hits == 0) throw DomainError("oracle_appendix_b: empty feasible set");
  // |grad g| on the sphere is at most r^2/sqrt(3); any point of the feasible set
  // lies within the half-cell diagonal of a grid point or an arc step of a face
  // circle point.
  const double half_cell = r * (kPi / (ng - 1) + 2 * kPi / ng) / 2;
  const double bound = r2 / std::sqrt(3.0) * (half_cell + 2 * kPi * r / na);
  return {ex.lo, ex.hi, ex.arglo, ex.arghi, bound + kErrorFloor};
}

DensityMatrix sample_hs_state(Rng& rng) {
  ComplexMatrix g(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho = (rho + rho.adjoint()).eval() / 2.0;
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho), {2, 2});
}

std::vector<DensityMatrix> sample_hs_random(std::size_t count, std::uint64_t seed) {
  if (count < 1) throw DomainError("sample_hs_random: count must be >= 1");
  std::vector<DensityMatrix> out;
  out.reserve(count);
  for_each_seeded(count, seed, [&](std::size_t, Rng& rng) { out.push_back(sample_hs_state(rng)); });
  return out;
}

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::HilbertSchmidt: return "hs";
    case Ensemble::BellDiagonal: return "bell";
    case Ensemble::XState: return "xstate";
  }
  return "?";
}

Ensemble ensemble_from_string(std::string_view name) {
  if (name == "hs") return Ensemble::HilbertSchmidt;
  if (name == "bell") return Ensemble::BellDiagonal;
  if (name == "xstate") return Ensemble::XState;
  throw DomainError("unknown ensemble '" + std::string(name) + "'");
}

void for_each_ensemble_state(Ensemble e, std::size_t count, std::uint64_t seed,
                             const std::function<void(std::size_t, const DensityMatrix&)>& fn) {
  for_each_seeded(count, seed, [&](std::size_t i, Rng& rng) {
    switch (e) {
      case Ensemble::HilbertSchmidt: fn(i, sample_hs_state(rng)); break;
      case Ensemble::BellDiagonal: fn(i, bell_state(sample_bell_vector(rng))); break;
      case Ensemble::XState: fn(i, x_state(sample_x_state(rng))); break;
    }
  });
}

ConsistencyReport consistency_harness(Ensemble e, std::size_t count, std::uint64_t seed) {
  ConsistencyReport report;
  report.ensemble = e;
  report.count = count;
  if (count < 1) return report;

  auto check = [&](std::size_t i, const DensityMatrix& rho, const BellVector* bell) {
    const PTMomentVector m = moments_by_trace(rho);
    const RegionVerdict verdict = classify_pair(m.p2, m.p3);
    const PPTReport ppt = ppt_report(rho);
    if (verdict.label == RegionLabel::Infeasible) {
      ++report.infeasible;
      report.disagreements.push_back({i, m.p2, m.p3, ppt.min_pt_eigenvalue, verdict.label});
      return;
    }
    const double p2 = std::clamp(m.p2, 0.25, 1.0);
    if (std::abs(m.p3 - phi4_piecewise(p2)) <= kBorderExclusion) {
      ++report.excluded;
      return;
    }
    const bool entangled = verdict.label == RegionLabel::Entangled;
    if (entangled != ppt.is_npt) {
      ++(entangled ? report.false_entangled : report.missed_entangled);
      report.disagreements.push_back({i, m.p2, m.p3, ppt.min_pt_eigenvalue, verdict.label});
    }
    if (bell != nullptr && bell_is_separable(*bell) == ppt.is_npt) ++report.bell_mismatches;
  };

  for_each_seeded(count, seed, [&](std::size_t i, Rng& rng) {
    switch (e) {
      case Ensemble::HilbertSchmidt: check(i, sample_hs_state(rng), nullptr); break;
      case Ensemble::BellDiagonal: {
        const BellVector v = sample_bell_vector(rng);
        check(i, bell_state(v), &v);
        break;
      }
      case Ensemble::XState: check(i, x_state(sample_x_state(rng)), nullptr); break;
    }
  });
  return report;
}

}  // namespace ptm
