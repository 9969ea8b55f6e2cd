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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bullet/model.hpp"
#include "bullet/sampler.hpp"

namespace bullet {

struct Preset {
  std::string name;
  Parameter params;
  PoissonLaw law;
};

inline constexpr double kDefaultBggsAlpha = 0.75;

/// cbmc, loop-half, loop, hammersley, bggs (alpha = 0.75), pv, ph.
const std::vector<Preset>& preset_registry();

/// (1, 0, 0, 0, 0, 0, 1 - alpha, alpha) with Poisson(1, 1) entries.
Preset bggs_preset(double alpha);

/// Looks up a registry name; "bggs:<alpha>" selects another alpha.
std::optional<Preset> find_preset(std::string_view name);

/// A preset name or eight comma-separated numbers.
Parameter parse_parameter(std::string_view spec);

/// Name of the registry entry equal to p within tol, if any.
std::optional<std::string> preset_name_of(const Parameter& p, double tol = 1e-12);

/// Comma-separated finite numbers.
std::vector<double> parse_numbers(std::string_view text);

/// "x0,y0,x1,y1".
Rectangle parse_rectangle(std::string_view text);

}  // namespace bullet
