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

#include <array>
#include <string_view>

#include "bullet/model.hpp"

namespace bullet {

/// Elements of the dihedral group of the square.
///
/// Rotations are counterclockwise about the origin, kRot90(x,y) = (-y,x).
/// kReflect is the diagonal flip r(x,y) = (y,x); kReflectRotK denotes
/// r composed after the rotation, i.e. r(rot_K(p)).
enum class Symmetry : std::uint8_t {
  kIdentity,
  kRot90,
  kRot180,
  kRot270,
  kReflect,
  kReflectRot90,
  kReflectRot180,
  kReflectRot270,
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::kIdentity,     Symmetry::kRot90,        Symmetry::kRot180,
    Symmetry::kRot270,       Symmetry::kReflect,      Symmetry::kReflectRot90,
    Symmetry::kReflectRot180, Symmetry::kReflectRot270};

/// Command-line names: id, pi2, pi, pi32, r, rpi2, rpi, rpi32.
std::string_view to_string(Symmetry g);
Symmetry symmetry_from_string(std::string_view name);

/// Returns outer o inner, the map p -> outer(inner(p)).
Symmetry compose(Symmetry outer, Symmetry inner);
Symmetry inverse(Symmetry g);

Point apply(Symmetry g, Point p);
Rectangle apply(Symmetry g, const Rectangle& r);

/// True when g exchanges the vertical and horizontal axes.
bool swaps_axes(Symmetry g);

/// Maps the kind of a point of U to the kind of its image in g(U).
using KindMap = std::array<PointKind, kPointKindCount>;

KindMap forward_kind_map(Symmetry g);

/// Pull-back correspondence: entry k is the kind in U of the points that
/// have kind k in g(U), so that stats(g(U))[k] == stats(U)[map[k]].
/// For kRot180 this is VE<->VS, HE<->HS, OB<->OA, VB<->VA, HB<->HA,
/// VT<->HT; for kRot90 it reads e.g. HT -> OA.
KindMap stats_map_under_symmetry(Symmetry g);

/// Image of a diagram. Segment and crossing order is preserved; segment
/// kinds are relabelled with forward_kind_map.
Configuration apply_symmetry(Symmetry g, const Configuration& u);

/// Point counts of g(U) from those of U, swapping LV/LH when g swaps axes.
ConfigStats apply_symmetry(Symmetry g, const ConfigStats& s);

}  // namespace bullet
