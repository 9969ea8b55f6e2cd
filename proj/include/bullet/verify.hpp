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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bullet/model.hpp"
#include "bullet/sampler.hpp"
#include "bullet/symmetry.hpp"

namespace bullet {

enum class ReportKind {
  kDensityIdentityPi,
  kDensityIdentityPi2,
  kStationarity,
  kQrDistribution,
  kEmptyProbability,
};

std::string_view to_string(ReportKind k);

struct NamedValue {
  std::string name;
  double value = 0;
};

struct VerificationReport {
  ReportKind kind = ReportKind::kDensityIdentityPi;
  std::int64_t replicates = 0;
  std::optional<double> max_abs_deviation;  // identity kinds
  std::int64_t support_violations = 0;      // identity kinds
  std::vector<NamedValue> statistics;
  std::vector<NamedValue> p_values;
  double threshold = 0;
  bool passed = false;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

/// Runs body(i) for i in [0, n) on up to `threads` workers (0: hardware
/// concurrency). The first exception by index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

/// Substream of replicate i: side 0 is the forward sample, side 1 the
/// reverse or fresh sample.
RngStream replicate_stream(std::uint64_t seed, std::uint64_t side,
                           std::uint64_t i);

/// Largest |log f_p(U) - log f_pt(s_pi U)| over n forward diagrams, with
/// both sides under Poisson(nu_h, nu_v). Passes when the maximum is within
/// tol and no image has zero density.
VerificationReport verify_density_identity_pi(const Parameter& p,
                                              const Parameter& pt, double nu_h,
                                              double nu_v, const Rectangle& rect,
                                              std::int64_t n, std::uint64_t seed,
                                              double tol);

/// Quarter-turn version; the image is evaluated under Poisson(nu_v, nu_h)
/// on the rotated window.
VerificationReport verify_density_identity_pi2(const Parameter& p,
                                               const Parameter& pt, double nu_h,
                                               double nu_v,
                                               const Rectangle& rect,
                                               std::int64_t n,
                                               std::uint64_t seed, double tol);

/// Frequency of the empty diagram against exp(-nu_v w - nu_h h - l0 w h),
/// within 4 binomial standard deviations.
VerificationReport verify_empty_probability(const Parameter& p, double nu_h,
                                            double nu_v, const Rectangle& rect,
                                            std::int64_t n, std::uint64_t seed);

/// Entry trace and restricted law on [x0+dx, x1] x [y0+dy, y1].
VerificationReport verify_stationarity(const Parameter& p, double nu_h,
                                       double nu_v, const Rectangle& rect,
                                       Point shift, std::int64_t n,
                                       std::uint64_t seed, double alpha);

/// Compares statistics of g(U), U forward, with those of reverse diagrams
/// on g(rect). g must be kRot180 or kRot90.
VerificationReport verify_qr_distribution(Symmetry g, const Parameter& p,
                                          const Parameter& pt,
                                          const PoissonLaw& forward,
                                          const PoissonLaw& reverse,
                                          const Rectangle& rect, std::int64_t n,
                                          std::uint64_t seed, double alpha);

}  // namespace bullet
