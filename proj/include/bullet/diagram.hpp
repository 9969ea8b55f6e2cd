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
#include <utility>
#include <vector>

#include "bullet/model.hpp"

namespace bullet {

enum class ViolationKind {
  kEmptySegment,       // lo >= hi
  kOutsideRectangle,   // anchor or endpoint outside the window
  kDanglingEndpoint,   // interior endpoint not on a perpendicular segment
  kDuplicateAnchor,    // two parallel segments share a line
  kBadCrossing,        // stored crossing not interior to a V and an H
  kNonFinite,          // NaN or infinite coordinate
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<std::size_t> segment;
  std::optional<Point> point;
};

/// Checks the structural clauses of a configuration: endpoint matching,
/// distinct anchors and interior crossings. An empty result means valid.
std::vector<Violation> validate_configuration(const Configuration& u);

/// Throws Error listing the violations if the configuration is not valid.
void require_valid(const Configuration& u);

struct ClassifiedPoint {
  Point point;
  PointKind kind;

  bool operator==(const ClassifiedPoint&) const = default;
  auto operator<=>(const ClassifiedPoint&) const = default;
};

/// Classifies every segment endpoint and every vertical/horizontal crossing
/// from geometry alone; stored kinds and crossings are ignored. The result is
/// sorted by (x, y). Throws Error on an invalid configuration.
std::vector<ClassifiedPoint> classify_points(const Configuration& u);

/// The labelled points as stored on segments and in the crossing list,
/// deduplicated and sorted.
std::vector<ClassifiedPoint> stored_points(const Configuration& u);

/// Number of points on which stored labels and geometric classification
/// disagree (size of the symmetric difference).
std::size_t kind_mismatches(const Configuration& u);

/// Point counts by geometric classification, plus segment counts and
/// lengths. Throws Error on an invalid configuration.
ConfigStats extract_stats(const Configuration& u);

/// Clips the diagram to `sub`. Segments entering through the left/bottom
/// edges of `sub` are relabelled HE/VE, those leaving through the
/// right/top edges HS/VS. Throws Error unless sub lies inside u.rect.
Configuration restrict_to(const Configuration& u, const Rectangle& sub);

/// Distance between two configurations on the same rectangle: 3 when their
/// skeletons differ, otherwise the mean normalised anchor displacement
/// (verticals over width plus horizontals over height).
double config_distance(const Configuration& a, const Configuration& b);

}  // namespace bullet
