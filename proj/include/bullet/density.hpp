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

#include <utility>

#include "bullet/model.hpp"
#include "bullet/sampler.hpp"

namespace bullet {

/// Natural log of a diagram density. When a factor vanishes the density is
/// zero: finite_support is false and value is -infinity.
struct LogDensity {
  double value = 0;
  bool finite_support = true;
};

/// (LV, LH): total vertical and horizontal segment lengths.
std::pair<double, double> segment_lengths(const Configuration& u);

/// Density of the diagram law on rect under Poisson entries. Throws Error on
/// an invalid configuration or an explicit law.
LogDensity log_density(const Configuration& u, const Parameter& params,
                       const InitialLaw& law);

/// Same from precomputed statistics on a window of size w x h.
LogDensity log_density(const ConfigStats& s, double w, double h,
                       const Parameter& params, const PoissonLaw& law);

}  // namespace bullet
