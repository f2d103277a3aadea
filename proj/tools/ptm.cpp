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

// ptm: partial-transpose moments of two-qubit states from the command line.
//
// Exit status: 0 success, 1 usage or input error, 2 I/O error. A verdict is
// data, never an exit status.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptm/curves.hpp"
#include "ptm/error.hpp"
#include "ptm/families.hpp"
#include "ptm/io.hpp"
#include "ptm/oracle.hpp"
#include "ptm/ptmoments.hpp"
#include "ptm/region.hpp"
#include "ptm/verify.hpp"

namespace {

using namespace ptm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string boundary_flags(const RegionVerdict& v) {
  if (v.on_phi4_boundary && v.on_outer_boundary) return "phi4+outer";
  if (v.on_phi4_boundary) return "phi4";
  if (v.on_outer_boundary) return "outer";
  return "none";
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw UsageError("parameter " + key + ": '" + text + "' is not a number");
  }
  return v;
}

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end || text.empty()) {
    throw UsageError(std::string(origin) + ": '" + text + "' is not an unsigned 64-bit seed");
  }
  return v;
}

// Flag wins over PTM_SEED, which wins over the built-in default.
std::uint64_t resolve_seed(const std::optional<std::string>& flag) {
  if (flag) return parse_seed(*flag, "--seed");
  if (const char* env = std::getenv("PTM_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env, "PTM_SEED");
  }
  return 42;
}

// "k=v,k2=v2" into a map; keys must be unique.
std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param: expected key=value, got '" + item + "'");
    }
    if (!out.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
      throw UsageError("--param: duplicate key '" + item.substr(0, eq) + "'");
    }
    pos = comma + 1;
  }
  return out;
}

class Params {
 public:
  explicit Params(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    auto it = kv_.find(key);
    if (it == kv_.end()) {
      if (fallback) return *fallback;
      throw UsageError("--param: missing '" + key + "'");
    }
    used_.push_back(key);
    return parse_double(key, it->second);
  }

  std::string text(const std::string& key) {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw UsageError("--param: missing '" + key + "'");
    used_.push_back(key);
    return it->second;
  }

  void reject_unused() const {
    for (const auto& [k, v] : kv_) {
      if (std::find(used_.begin(), used_.end(), k) == used_.end()) {
        throw UsageError("--param: unknown key '" + k + "'");
      }
    }
  }

 private:
  std::map<std::string, std::string> kv_;
  std::vector<std::string> used_;
};

// --- curves -------------------------------------------------------------------

struct CurvesOptions {
  double p2_min = 0.25;
  double p2_max = 1.0;
  int samples = 101;
  std::string out;
  std::string format = "csv";
};

int cmd_curves(const CurvesOptions& o) {
  if (!(o.p2_min >= 0.25 && o.p2_min < o.p2_max && o.p2_max <= 1)) {
    throw UsageError("curves: need 1/4 <= --p2-min < --p2-max <= 1");
  }
  if (o.samples < 2) throw UsageError("curves: --samples must be >= 2");
  const TableFormat format = table_format_from_string(o.format);

  std::vector<double> grid;
  for (int i = 0; i < o.samples; ++i) {
    grid.push_back(i + 1 == o.samples ? o.p2_max
                                      : o.p2_min + (o.p2_max - o.p2_min) * i / (o.samples - 1));
  }
  // Breakpoints enter exactly, replacing grid points that round to them.
  for (double b : {1.0 / 3.0, 0.5}) {
    if (b < o.p2_min || b > o.p2_max) continue;
    auto near = std::find_if(grid.begin(), grid.end(),
                             [&](double p) { return std::abs(p - b) <= 1e-14; });
    if (near != grid.end()) *near = b;
    else grid.push_back(b);
  }
  std::sort(grid.begin(), grid.end());

  Table table{"curves", {"p2", "phi_plus", "phi4", "phi_minus", "phi_bell"}, {}};
  for (double p2 : grid) {
    table.add_row({p2, phi4_plus(p2), phi4_piecewise(p2), phi4_minus(p2), phi4_bell(p2)});
  }
  write_table(o.out, table, format);
  return kExitOk;
}

// --- classify -----------------------------------------------------------------

struct ClassifyOptions {
  std::string rho;
  std::string family;
  std::string params;
  std::string format = "text";
};

DensityMatrix family_state(const std::string& family, Params& p) {
  if (family == "werner") return werner_state({p.number("w")});
  if (family == "bell") return bell_state({p.number("t1"), p.number("t2"), p.number("t3")});
  if (family == "xstate") {
    XStateParams x;
    x.rho11 = p.number("rho11");
    x.rho22 = p.number("rho22");
    x.rho33 = p.number("rho33");
    x.rho44 = p.number("rho44");
    x.rho14 = {p.number("rho14_re", 0.0), p.number("rho14_im", 0.0)};
    x.rho23 = {p.number("rho23_re", 0.0), p.number("rho23_im", 0.0)};
    return x_state(x);
  }
  if (family == "ghzw") {
    const double n = p.number("n");
    if (n != std::floor(n) || n < 2 || n > 1e6) throw UsageError("ghzw: n must be an integer >= 2");
    const GHZWParams g{static_cast<int>(n), p.number("lambda")};
    return p.number("direct", 0.0) != 0 ? ghzw_direct_reduced(g) : ghzw_reduced(g);
  }
  if (family == "boundary") {
    return boundary_state(boundary_curve_from_string(p.text("curve")), p.number("t"));
  }
  throw UsageError("unknown family '" + family +
                   "' (werner, bell, xstate, ghzw, boundary)");
}

int cmd_classify(const ClassifyOptions& o) {
  if (o.rho.empty() == o.family.empty()) {
    throw UsageError("classify: give exactly one of --rho or --family");
  }
  if (o.format != "text" && o.format != "json") {
    throw UsageError("classify: --format must be text or json");
  }
  std::optional<DensityMatrix> rho;
  if (!o.rho.empty()) {
    if (!o.params.empty()) throw UsageError("classify: --param needs --family");
    rho = load_density_matrix(o.rho);
  } else {
    Params p(parse_params(o.params));
    rho = family_state(o.family, p);
    p.reject_unused();
  }
  if (rho->dims() != Dims{2, 2}) throw UsageError("classify: the state must have dims [2, 2]");

  const PTMomentVector m = moments_by_trace(*rho);
  const RegionVerdict v = classify_pair(m.p2, m.p3);
  const PPTReport ppt = ppt_report(*rho);

  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["p2"] = m.p2;
    j["p3"] = m.p3;
    j["p4"] = m.p4;
    j["verdict"] = std::string(to_string(v.label));
    j["boundary_flags"] = boundary_flags(v);
    j["min_pt_eig"] = ppt.min_pt_eigenvalue;
    j["negativity"] = ppt.negativity;
    // Re-serialize numbers at 15 significant digits.
    std::string text = "{";
    bool first = true;
    for (const auto& [k, val] : j.items()) {
      text += (first ? "" : ", ") + nlohmann::json(k).dump() + ": " +
              (val.is_number() ? format_number(val.get<double>()) : val.dump());
      first = false;
    }
    std::cout << text << "}\n";
  } else {
    std::cout << "p2 = " << format_number(m.p2) << '\n'
              << "p3 = " << format_number(m.p3) << '\n'
              << "p4 = " << format_number(m.p4) << '\n'
              << "verdict = " << to_string(v.label) << '\n'
              << "boundary_flags = " << boundary_flags(v) << '\n'
              << "min_pt_eig = " << format_number(ppt.min_pt_eigenvalue) << '\n'
              << "negativity = " << format_number(ppt.negativity) << '\n';
  }
  return kExitOk;
}

// --- sample -------------------------------------------------------------------

struct SampleOptions {
  std::string ensemble;
  long long count = 1000;
  std::optional<std::string> seed;
  std::string out;
  std::string format = "csv";
};

int cmd_sample(const SampleOptions& o) {
  const Ensemble e = ensemble_from_string(o.ensemble);
  if (o.count < 1) throw UsageError("sample: --count must be >= 1");
  const std::uint64_t seed = resolve_seed(o.seed);
  const TableFormat format = table_format_from_string(o.format);

  Table table{"sample",
              {"p2", "p3", "p4", "min_pt_eig", "negativity", "verdict", "boundary_flags"},
              {}};
  table.rows.reserve(static_cast<std::size_t>(o.count));
  for_each_ensemble_state(e, static_cast<std::size_t>(o.count), seed,
                          [&](std::size_t, const DensityMatrix& rho) {
                            const PTMomentVector m = moments_by_trace(rho);
                            const RegionVerdict v = classify_pair(m.p2, m.p3);
                            const PPTReport ppt = ppt_report(rho);
                            table.add_row({m.p2, m.p3, m.p4, ppt.min_pt_eigenvalue,
                                           ppt.negativity, std::string(to_string(v.label)),
                                           boundary_flags(v)});
                          });
  write_table(o.out, table, format);
  return kExitOk;
}

// --- ghzw ---------------------------------------------------------------------

struct GhzwOptions {
  int n = 3;
  int lambda_grid = 101;
  std::string out;
  std::string format = "csv";
  std::string track = "closed";
};

int cmd_ghzw(const GhzwOptions& o) {
  if (o.n < 2 || o.n > kMaxQubits) {
    throw UsageError("ghzw: --n must be in [2, " + std::to_string(kMaxQubits) + "]");
  }
  if (o.lambda_grid < 2) throw UsageError("ghzw: --lambda-grid must be >= 2");
  if (o.track != "closed" && o.track != "direct") {
    throw UsageError("ghzw: --track must be closed or direct");
  }
  const TableFormat format = table_format_from_string(o.format);
  const bool direct = o.track == "direct";
  // The closed-form threshold describes the closed-form marginal; at n = 2 the
  // directly constructed state differs and has no such threshold.
  const double threshold =
      direct && o.n == 2 ? std::nan("") : ghzw_entanglement_threshold(o.n);

  Table table{"ghzw", {"n", "lambda", "p2", "p3", "verdict", "threshold"}, {}};
  for (int i = 0; i < o.lambda_grid; ++i) {
    const double lambda = static_cast<double>(i) / (o.lambda_grid - 1);
    const GHZWParams g{o.n, lambda};
    MomentPair m;
    if (direct) {
      const PTMomentVector v = moments_by_trace(ghzw_direct_reduced(g));
      m = {v.p2, v.p3};
    } else {
      m = ghzw_moments(g);
    }
    table.add_row({std::int64_t{o.n}, lambda, m.p2, m.p3,
                   std::string(to_string(classify_pair(m.p2, m.p3).label)), threshold});
  }
  write_table(o.out, table, format);
  return kExitOk;
}

// --- verify -------------------------------------------------------------------

struct VerifyCmdOptions {
  std::string suite = "all";
  std::optional<std::string> seed;
  int resolution = 100000;
};

int cmd_verify(const VerifyCmdOptions& o) {
  const Suite suite = suite_from_string(o.suite);
  if (o.resolution < 10) throw UsageError("verify: --resolution must be >= 10");
  VerifyOptions opts;
  opts.seed = resolve_seed(o.seed);
  opts.angle_resolution = o.resolution;
  bool ok = true;
  for (const CheckResult& r : run_suite(suite, opts)) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.measured << '\n';
    ok = ok && r.pass;
  }
  return ok ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-transpose moments and separability of two-qubit states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ptm 1.0.0");

  CurvesOptions curves;
  auto* c = app.add_subcommand("curves", "Tabulate the region boundary curves over p2");
  c->add_option("--p2-min", curves.p2_min, "Lower end of the p2 grid")->capture_default_str();
  c->add_option("--p2-max", curves.p2_max, "Upper end of the p2 grid")->capture_default_str();
  c->add_option("--samples", curves.samples, "Uniform grid points (breakpoints are added)")
      ->capture_default_str();
  c->add_option("--out", curves.out, "Output file (default stdout)");
  c->add_option("--format", curves.format, "csv or json")->capture_default_str();

  ClassifyOptions classify;
  auto* k = app.add_subcommand("classify", "Moments, verdict and PPT data of one state");
  k->add_option("--rho", classify.rho, "Density matrix JSON file");
  k->add_option("--family", classify.family, "werner, bell, xstate, ghzw or boundary");
  k->add_option("--param", classify.params, "Family parameters as k=v,...");
  k->add_option("--format", classify.format, "text or json")->capture_default_str();

  SampleOptions sample;
  auto* s = app.add_subcommand("sample", "Sample an ensemble and tabulate each state");
  s->add_option("--ensemble", sample.ensemble, "hs, bell or xstate")->required();
  s->add_option("--count", sample.count, "Number of states")->capture_default_str();
  s->add_option("--seed", sample.seed, "RNG seed (default $PTM_SEED, else 42)");
  s->add_option("--out", sample.out, "Output file (default stdout)");
  s->add_option("--format", sample.format, "csv or json")->capture_default_str();

  GhzwOptions ghzw;
  auto* g = app.add_subcommand("ghzw", "Moments of two-qubit marginals of GHZ/W mixtures");
  g->add_option("--n", ghzw.n, "Number of qubits")->capture_default_str();
  g->add_option("--lambda-grid", ghzw.lambda_grid, "Points on the uniform lambda grid")
      ->capture_default_str();
  g->add_option("--out", ghzw.out, "Output file (default stdout)");
  g->add_option("--format", ghzw.format, "csv or json")->capture_default_str();
  g->add_option("--track", ghzw.track, "closed (closed-form marginal) or direct")
      ->capture_default_str();

  VerifyCmdOptions verify;
  auto* v = app.add_subcommand("verify", "Run the built-in verification suites");
  v->add_option("--suite", verify.suite, "areas, appendix-a, appendix-b, consistency or all")
      ->capture_default_str();
  v->add_option("--seed", verify.seed, "RNG seed (default $PTM_SEED, else 42)");
  v->add_option("--resolution", verify.resolution, "Angle resolution of the circle scans")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_curves(curves);
    if (k->parsed()) return cmd_classify(classify);
    if (s->parsed()) return cmd_sample(sample);
    if (g->parsed()) return cmd_ghzw(ghzw);
    if (v->parsed()) return cmd_verify(verify);
  } catch (const IoError& e) {
    std::cerr << "ptm: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "ptm: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
