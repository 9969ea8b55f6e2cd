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

#include <cmath>
#include <optional>
#include <random>

#include "bullet/model.hpp"
#include "bullet/reversibility.hpp"

namespace bullet::testing {

inline Segment vseg(double x, double lo, double hi, PointKind lk, PointKind hk) {
  return {Orientation::kVertical, x, lo, hi, lk, hk};
}

inline Segment hseg(double y, double lo, double hi, PointKind lk, PointKind hk) {
  return {Orientation::kHorizontal, y, lo, hi, lk, hk};
}

inline const Rectangle kSquare{-1, -1, 1, 1};

// Rates uniform on [0,2], (pV, pH, p0) uniform on the simplex sum <= 1.
inline Parameter draw_parameter(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> rate(0.0, 2.0);
  std::exponential_distribution<double> e(1.0);
  Parameter p{rate(gen), rate(gen), rate(gen), rate(gen), rate(gen), 0, 0, 0};
  const double w[4] = {e(gen), e(gen), e(gen), e(gen)};
  const double total = w[0] + w[1] + w[2] + w[3];
  p.pV = w[0] / total;
  p.pH = w[1] / total;
  p.p0 = w[2] / total;
  return p;
}

// Smallest |A|, |BV|, |BH| accepted by the conditioned draws. Keeps the
// derived rates well away from the applicability threshold.
inline constexpr double kInvariantFloor = 1e-3;

inline bool invariants_clear(const Parameter& p) {
  const ReversibilityInvariants k = invariants_of(p);
  return std::abs(k.A) > kInvariantFloor && std::abs(k.BV) > kInvariantFloor &&
         std::abs(k.BH) > kInvariantFloor;
}

// lambda0 set so that BH BV lambda0 = A^2 p0.
inline std::optional<Parameter> condition_pi(Parameter p) {
  if (!invariants_clear(p)) return std::nullopt;
  const ReversibilityInvariants k = invariants_of(p);
  const double l0 = k.A * k.A * p.p0 / (k.BH * k.BV);
  if (!(l0 >= 0) || !std::isfinite(l0)) return std::nullopt;
  p.lambda0 = l0;
  return p;
}

// tauV from A p0 = BH tauV (A is affine in tauV), then lambda0 from
// BV lambda0 = A tauV.
inline std::optional<Parameter> condition_pi2(Parameter p) {
  const double bh = invariants_of(p).BH;
  const double denom = bh - p.lambdaH * p.p0;
  if (!(std::abs(denom) > kInvariantFloor)) return std::nullopt;
  const double tv = (p.lambdaH + p.tauH) * p.lambdaV * p.p0 / denom;
  if (!(tv >= 0) || !std::isfinite(tv)) return std::nullopt;
  p.tauV = tv;
  if (!invariants_clear(p)) return std::nullopt;
  const ReversibilityInvariants k = invariants_of(p);
  const double l0 = k.A * p.tauV / k.BV;
  if (!(l0 >= 0) || !std::isfinite(l0)) return std::nullopt;
  p.lambda0 = l0;
  return p;
}

}  // namespace bullet::testing
