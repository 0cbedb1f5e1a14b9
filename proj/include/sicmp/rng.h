// Copyright 2026 The sicmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SICMP_RNG_H
#define SICMP_RNG_H

#include <cstdint>
#include <limits>
#include <string_view>

namespace sicmp {

/// Counter-based SplitMix64 generator: output k is mix64(seed + k * golden),
/// so any draw can be reproduced from (seed, k) alone. Satisfies
/// UniformRandomBitGenerator for use with boost::random distributions.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  static constexpr std::string_view kAlgorithmId = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return at(seed_, ++counter_); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix64(std::uint64_t z);
  static std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + counter * 0x9E3779B97F4A7C15ULL);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Per-stage seed: mix64(seed ^ fnv1a64(stage)). Lets one top-level seed
/// drive several independent random stages.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view stage);

}  // namespace sicmp

#endif  // SICMP_RNG_H
