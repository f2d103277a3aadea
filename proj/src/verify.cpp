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

#include "ptm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "ptm/curves.hpp"
#include "ptm/error.hpp"
#include "ptm/io.hpp"
#include "ptm/oracle.hpp"
#include "ptm/region.hpp"

namespace ptm {
namespace {

std::string fmt(double x) { return format_number(x); }

void areas(std::vector<CheckResult>& out) {
  const RegionAreas a = region_areas();
  const double sep = 43.0 / 2160.0, ent = 443.0 / 2160.0;
  out.push_back({"areas.separable", std::abs(a.separable - sep) <= 1e-9,
                 "a_sep = " + fmt(a.separable) + " vs 43/2160 = " + fmt(sep)});
  out.push_back({"areas.entangled", std::abs(a.entangled - ent) <= 1e-9,
                 "a_ent = " + fmt(a.entangled) + " vs 443/2160 = " + fmt(ent)});
}

void appendix_a(std::vector<CheckResult>& out, const VerifyOptions& opts) {
  OracleConfig cfg;
  cfg.angle_resolution = opts.angle_resolution;
  constexpr int kGrid = 50;
  int points = 0, outside = 0, bracketed = 0;
  double worst_ratio = 0;
  for (int i = 0; i < kGrid; ++i) {
    const double t = 1.0 / 3.0 + (2.0 / 3.0) * i / (kGrid - 1);
    const double s_hi = appendix_tangency_s(t);
    for (int j = 0; j < kGrid; ++j) {
      const double s = 1 + (s_hi - 1) * j / (kGrid - 1);
      if (appendix_region(t, s).region == AppendixRegion::Outside) {
        ++outside;
        continue;
      }
      ++points;
      const AppendixBounds b = appendix_bounds(t, s);
      const OracleResult o = oracle_appendix_a(t, s, cfg);
      const double d = o.error_bound;
      if (b.f_min >= o.value_min - d && b.f_min <= o.value_max + d && b.f_max >= o.value_min - d &&
          b.f_max <= o.value_max + d) {
        ++bracketed;
      }
      worst_ratio = std::max({worst_ratio, std::abs(o.value_min - b.f_min) / d,
                              std::abs(o.value_max - b.f_max) / d});
    }
  }
  out.push_back({"appendix-a.bracketing", points > 0 && bracketed == points,
                 std::to_string(bracketed) + "/" + std::to_string(points) +
                     " grid points bracketed (" + std::to_string(outside) +
                     " outside R); max |oracle - closed form| / bound = " + fmt(worst_ratio)});

  // min over s of m and of M, scanned on [1, s_tan], against Phi4-.
  constexpr int kS = 4001;
  double worst = 0;
  for (int i = 1; i < kGrid; ++i) {
    const double t = 1.0 / 3.0 + (2.0 / 3.0) * i / (kGrid - 1);
    const double s_hi = appendix_tangency_s(t);
    double min_m = INFINITY, min_big = INFINITY;
    for (int j = 0; j < kS; ++j) {
      const double s = 1 + (s_hi - 1) * j / (kS - 1);
      if (appendix_region(t, s).region == AppendixRegion::Outside) continue;
      const AppendixBounds b = appendix_bounds(t, s);
      min_m = std::min(min_m, b.f_min);
      min_big = std::min(min_big, b.f_max);
    }
    const double target = phi4_minus(t);
    worst = std::max({worst, std::abs(min_m - target), std::abs(min_big - target)});
  }
  out.push_back({"appendix-a.global-minimum", worst <= 1e-6,
                 "max |min_s bound - Phi4-(t)| = " + fmt(worst)});
}

void appendix_b(std::vector<CheckResult>& out, const VerifyOptions& opts) {
  OracleConfig cfg;
  cfg.angle_resolution = opts.angle_resolution;
  cfg.grid_resolution = opts.grid_resolution;
  for (double p2 : {0.26, 0.30, 0.40, 0.45, 0.60, 0.75, 0.95}) {
    const OracleResult o = oracle_appendix_b(p2, cfg);
    const double closed = (8 * phi4_bell(p2) - 6 * p2 + 1) / 3;
    const double gap = std::abs(o.value_max - closed);
    out.push_back({"appendix-b.p2=" + fmt(p2), gap <= o.error_bound,
                   "g_max = " + fmt(o.value_max) + " vs closed form " + fmt(closed) +
                       ", |diff| = " + fmt(gap) + ", bound " + fmt(o.error_bound)});
  }
}

void consistency(std::vector<CheckResult>& out, const VerifyOptions& opts) {
  const std::pair<Ensemble, std::size_t> runs[] = {
      {Ensemble::HilbertSchmidt, opts.consistency_count},
      {Ensemble::BellDiagonal, std::max<std::size_t>(1, opts.consistency_count / 10)},
      {Ensemble::XState, std::max<std::size_t>(1, opts.consistency_count / 10)},
  };
  for (const auto& [e, n] : runs) {
    const ConsistencyReport r = consistency_harness(e, n, opts.seed);
    std::string measured = std::to_string(r.disagreements.size()) + " disagreements / " +
                           std::to_string(r.count) + " (" + std::to_string(r.false_entangled) +
                           " Entangled-but-PPT, " + std::to_string(r.missed_entangled) +
                           " Separable-but-NPT, " + std::to_string(r.excluded) +
                           " excluded at the border, " + std::to_string(r.infeasible) +
                           " infeasible";
    if (e == Ensemble::BellDiagonal) {
      measured += ", " + std::to_string(r.bell_mismatches) + " l1-criterion mismatches";
    }
    out.push_back({"consistency." + std::string(to_string(e)), r.pass(), measured + ")"});
    out.push_back({"consistency." + std::string(to_string(e)) + ".entangled-labels-npt",
                   r.sound(),
                   std::to_string(r.false_entangled) + " of the Entangled labels are PPT"});
  }
}

template <typename Fn>
void guarded(std::vector<CheckResult>& out, const char* name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("error: ") + e.what()});
  }
}

}  // namespace

Suite suite_from_string(std::string_view name) {
  if (name == "areas") return Suite::Areas;
  if (name == "appendix-a") return Suite::AppendixA;
  if (name == "appendix-b") return Suite::AppendixB;
  if (name == "consistency") return Suite::Consistency;
  if (name == "all") return Suite::All;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Areas) guarded(out, "areas", [&] { areas(out); });
  if (all || suite == Suite::AppendixA) guarded(out, "appendix-a", [&] { appendix_a(out, opts); });
  if (all || suite == Suite::AppendixB) guarded(out, "appendix-b", [&] { appendix_b(out, opts); });
  if (all || suite == Suite::Consistency) {
    guarded(out, "consistency", [&] { consistency(out, opts); });
  }
  return out;
}

}  // namespace ptm
