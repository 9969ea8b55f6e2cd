// Copyright 2026 The bulletlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace bullet {

/// 64-bit finalizer used to derive independent seeds.
std::uint64_t mix64(std::uint64_t z);

/// Seed of substream `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic random stream backed by mt19937_64.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Stream number `index` of `seed`; distinct indices give unrelated streams.
  static RngStream substream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t seed() const { return seed_; }

  /// Uniform on [0,1) with 53 random bits.
  double uniform();

  /// Exponential with the given rate by inversion; +inf when rate is 0.
  double exponential(double rate);

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace bullet
