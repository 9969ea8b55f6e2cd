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
#include <vector>

#include "bullet/model.hpp"
#include "bullet/symmetry.hpp"

namespace bullet {

/// One segment of a skeleton. `rank` is the 1-based rank of the anchor among
/// parallel segments. Endpoint positions index the perpendicular axis grid:
/// 0 is the lower/left edge, count+1 the upper/right edge and 1..count are
/// the ranks of the perpendicular segments.
struct SkeletonSegment {
  int rank = 0;
  int lo = 0;
  int hi = 0;
  PointKind lo_kind = PointKind::VE;
  PointKind hi_kind = PointKind::VS;

  bool operator==(const SkeletonSegment&) const = default;
  auto operator<=>(const SkeletonSegment&) const = default;
};

/// Combinatorial class of a configuration under increasing reparametrisations
/// of each axis.
struct Skeleton {
  int n = 0;
  int m = 0;
  std::vector<SkeletonSegment> verticals;    // sorted by rank
  std::vector<SkeletonSegment> horizontals;  // sorted by rank
  std::vector<std::pair<int, int>> crossings;  // (vertical rank, horizontal rank), sorted

  bool operator==(const Skeleton&) const = default;
};

/// Throws Error on an invalid configuration.
Skeleton skeleton_of(const Configuration& u);

/// Representative with anchors x_i = x0 + i*w/(n+1), y_j = y0 + j*h/(m+1).
Configuration canonical_configuration(const Skeleton& k, const Rectangle& rect);

/// Combinatorial image of a skeleton under g.
Skeleton apply_symmetry(Symmetry g, const Skeleton& k);

}  // namespace bullet
