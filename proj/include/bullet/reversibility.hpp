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
#include <variant>
#include <vector>

#include "bullet/model.hpp"
#include "bullet/symmetry.hpp"

namespace bullet {

inline constexpr double kDefaultTolerance = 1e-12;

/// A = (lH+tH)(lV+tV) - tV tH,
/// BV = (pH+pV)(lV+tV) - pV lV,
/// BH = (pH+pV)(lH+tH) - pH lH.
struct ReversibilityInvariants {
  double A = 0;
  double BV = 0;
  double BH = 0;
};

ReversibilityInvariants invariants_of(const Parameter& p);

/// Exchanges the roles of verticals and horizontals.
Parameter r_reverse(const Parameter& p);

/// A g-reverse: the reverse parameter, the Poisson intensities of the
/// forward stationary law and those of the reverse law, when known.
struct ReversePair {
  Parameter params;
  std::optional<double> nu_h;
  std::optional<double> nu_v;
  std::optional<double> reverse_nu_h;
  std::optional<double> reverse_nu_v;
  std::string source;
};

struct NotApplicable {
  std::string reason;
};

using ReverseResult = std::variant<ReversePair, NotApplicable>;

inline bool applicable(const ReverseResult& r) {
  return std::holds_alternative<ReversePair>(r);
}

/// Half-turn reverse; needs A, BV, BH nonzero and BH BV l0 = A^2 p0.
ReverseResult corollary_pi(const Parameter& p, double tol = kDefaultTolerance);

/// Quarter-turn reverse; needs A, BV, BH nonzero, BV l0 = A tV and
/// A p0 = BH tV. The reverse law has swapped intensities.
ReverseResult corollary_pi2(const Parameter& p, double tol = kDefaultTolerance);

/// One checked equality.
struct ConditionItem {
  int condition = 0;  // 1..5
  std::string label;
  double left = 0;
  double right = 0;
  bool satisfied = false;
};

struct ConditionReport {
  std::string theorem;
  std::vector<ConditionItem> items;
  bool passed = false;

  /// Conjunction of the items of condition k.
  bool condition_passed(int k) const;
};

/// |l - r| <= tol * max(1, |l|, |r|).
bool close(double l, double r, double tol);

ConditionReport check_theorem_pi(const Parameter& p, const Parameter& pt,
                                 double nu_v, double nu_h,
                                 double tol = kDefaultTolerance);

ConditionReport check_theorem_pi2(const Parameter& p, const Parameter& pt,
                                  double nu_v, double tol = kDefaultTolerance);

/// g-reverse for any element of the square group, built from r_reverse and
/// the two corollaries.
ReverseResult reverse_under(Symmetry g, const Parameter& p,
                            double tol = kDefaultTolerance);

}  // namespace bullet
