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

#include "bullet/density.hpp"

#include <cmath>
#include <limits>

#include "bullet/diagram.hpp"

namespace bullet {

std::pair<double, double> segment_lengths(const Configuration& u) {
  double lv = 0;
  double lh = 0;
  for (const Segment& s : u.segments) {
    (s.orientation == Orientation::kVertical ? lv : lh) += s.length();
  }
  return {lv, lh};
}

namespace {

// count * ln(base) with 0 ln 0 = 0.
void add_power(LogDensity& d, std::int64_t count, double base) {
  if (count == 0) return;
  if (!(base > 0)) {
    d.finite_support = false;
    return;
  }
  d.value += static_cast<double>(count) * std::log(base);
}

}  // namespace

LogDensity log_density(const ConfigStats& s, double w, double h,
                       const Parameter& p, const PoissonLaw& law) {
  validate(p);
  LogDensity d;
  using K = PointKind;
  add_power(d, s[K::VE], law.nu_v);
  add_power(d, s[K::HE], law.nu_h);
  d.value -= law.nu_v * w + law.nu_h * h;
  d.value -= (p.lambdaV + p.tauV) * s.LV + (p.lambdaH + p.tauH) * s.LH;
  d.value -= p.lambda0 * w * h;
  add_power(d, s[K::OB], p.lambda0);
  add_power(d, s[K::VB], p.lambdaH);
  add_power(d, s[K::HB], p.lambdaV);
  add_power(d, s[K::VT], p.tauH);
  add_power(d, s[K::HT], p.tauV);
  add_power(d, s[K::HA], p.pV);
  add_power(d, s[K::VA], p.pH);
  add_power(d, s[K::OA], p.p0);
  add_power(d, s[K::CC], 1.0 - p.pV - p.pH - p.p0);
  if (!d.finite_support) d.value = -std::numeric_limits<double>::infinity();
  return d;
}

LogDensity log_density(const Configuration& u, const Parameter& params,
                       const InitialLaw& law) {
  const auto* ppp = std::get_if<PoissonLaw>(&law);
  if (ppp == nullptr) {
    throw Error("log_density needs a Poisson entry law");
  }
  validate_law(law, u.rect);
  const ConfigStats s = extract_stats(u);
  return log_density(s, u.rect.width(), u.rect.height(), params, *ppp);
}

}  // namespace bullet
