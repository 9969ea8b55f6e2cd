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

#include "bullet/model.hpp"

namespace bullet::detail {

/// What a line does at a point: begins there, ends there, passes through,
/// or is absent (boundary points involve a single line).
enum class Role : std::uint8_t { kNone, kStart, kEnd, kPass };

struct Roles {
  Role vertical = Role::kNone;
  Role horizontal = Role::kNone;
};

constexpr PointKind kind_from_roles(Role v, Role h) {
  using R = Role;
  if (h == R::kNone) return v == R::kStart ? PointKind::VE : PointKind::VS;
  if (v == R::kNone) return h == R::kStart ? PointKind::HE : PointKind::HS;
  switch (v) {
    case R::kStart:
      return h == R::kStart ? PointKind::OB
             : h == R::kPass ? PointKind::VB
                             : PointKind::VT;
    case R::kEnd:
      return h == R::kStart ? PointKind::HT
             : h == R::kPass ? PointKind::VA
                             : PointKind::OA;
    default:
      return h == R::kStart ? PointKind::HB
             : h == R::kPass ? PointKind::CC
                             : PointKind::HA;
  }
}

constexpr Roles roles_of(PointKind k) {
  using R = Role;
  switch (k) {
    case PointKind::VE: return {R::kStart, R::kNone};
    case PointKind::VS: return {R::kEnd, R::kNone};
    case PointKind::HE: return {R::kNone, R::kStart};
    case PointKind::HS: return {R::kNone, R::kEnd};
    case PointKind::OB: return {R::kStart, R::kStart};
    case PointKind::OA: return {R::kEnd, R::kEnd};
    case PointKind::VB: return {R::kStart, R::kPass};
    case PointKind::HB: return {R::kPass, R::kStart};
    case PointKind::VT: return {R::kStart, R::kEnd};
    case PointKind::HT: return {R::kEnd, R::kStart};
    case PointKind::VA: return {R::kEnd, R::kPass};
    case PointKind::HA: return {R::kPass, R::kEnd};
    case PointKind::CC: return {R::kPass, R::kPass};
  }
  return {};
}

constexpr Role flip(Role r) {
  return r == Role::kStart ? Role::kEnd
         : r == Role::kEnd ? Role::kStart
                           : r;
}

}  // namespace bullet::detail
