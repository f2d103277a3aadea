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

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>

namespace ptm {

/// Samples per RNG stream. Sample i of a seeded run draws from stream
/// (seed, i / kStreamBlock), so blocks can be generated independently and in
/// any order without changing the output.
inline constexpr std::size_t kStreamBlock = 4096;

/// std::mt19937_64 seeded through std::seed_seq from (seed, stream); both are
/// bit-specified by the standard. Gaussians come from Box-Muller.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform();
  /// Uniform in (0, 1].
  double uniform_positive() { return 1.0 - uniform(); }
  double normal();
  /// Real and imaginary parts independent standard normals.
  std::complex<double> complex_normal();
  double gamma(double shape);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0;
  bool has_spare_ = false;
};

/// Calls fn(i, rng) for i = 0..count-1 following the stream-split rule.
template <typename Fn>
void for_each_seeded(std::size_t count, std::uint64_t seed, Fn&& fn) {
  for (std::size_t block = 0; block * kStreamBlock < count; ++block) {
    Rng rng(seed, block);
    const std::size_t end = std::min(count, (block + 1) * kStreamBlock);
    for (std::size_t i = block * kStreamBlock; i < end; ++i) fn(i, rng);
  }
}

}  // namespace ptm
