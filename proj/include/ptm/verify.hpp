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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ptm {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string measured;  // human-readable measured values
};

enum class Suite { Areas, AppendixA, AppendixB, Consistency, All };

/// Accepts "areas", "appendix-a", "appendix-b", "consistency", "all".
Suite suite_from_string(std::string_view name);

struct VerifyOptions {
  std::uint64_t seed = 42;
  int angle_resolution = 100000;
  int grid_resolution = 400;
  std::size_t consistency_count = 100000;
};

/// Runs the suite; failures are reported in the results, never thrown.
std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opts = {});

}  // namespace ptm
