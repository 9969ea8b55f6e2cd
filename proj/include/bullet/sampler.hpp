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
#include <variant>
#include <vector>

#include "bullet/model.hpp"
#include "bullet/rng.hpp"

namespace bullet {

/// Independent Poisson entries: horizontals on the left edge at rate nu_h,
/// verticals on the bottom edge at rate nu_v.
struct PoissonLaw {
  double nu_h = 0;
  double nu_v = 0;
  bool operator==(const PoissonLaw&) const = default;
};

/// Fixed entries: abscissas cx on the bottom edge, ordinates cy on the left.
struct ExplicitLaw {
  std::vector<double> cx;
  std::vector<double> cy;
  bool operator==(const ExplicitLaw&) const = default;
};

using InitialLaw = std::variant<PoissonLaw, ExplicitLaw>;

struct InitialCondition {
  std::vector<double> cx;
  std::vector<double> cy;
};

/// Raised when a diagram needs more than maxEvents events.
class RunawayDiagram : public Error {
 public:
  using Error::Error;
};

inline constexpr std::int64_t kDefaultMaxEvents = 10'000'000;

/// Poisson points of the given rate on (lo, hi), sorted.
std::vector<double> sample_ppp_interval(double rate, double lo, double hi,
                                        RngStream& rng);

/// Poisson points of the given rate per unit area in the open rectangle,
/// sorted by x.
std::vector<Point> sample_ppp_rectangle(double rate, const Rectangle& rect,
                                        RngStream& rng);

/// Throws Error on negative intensities or explicit lists that are unsorted
/// or leave the open edges of rect.
void validate_law(const InitialLaw& law, const Rectangle& rect);

InitialCondition sample_initial_condition(const InitialLaw& law,
                                          const Rectangle& rect, RngStream& rng);

/// Samples the space-time diagram on rect by sweeping x from left to right.
Configuration build_diagram(const Parameter& params, const InitialLaw& law,
                            const Rectangle& rect, RngStream& rng,
                            std::int64_t max_events = kDefaultMaxEvents);

}  // namespace bullet
