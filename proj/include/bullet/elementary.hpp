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

#include <string_view>

#include "bullet/density.hpp"
#include "bullet/model.hpp"

namespace bullet {

/// Elementary diagrams with closed-form densities.
///
/// The first six live on [-a,a] x [-b,b]:
///   kEmpty         nothing enters, nothing is created;
///   kVertical      one vertical enters at x and leaves at the top;
///   kKill          a horizontal entering at y dies on a full vertical at x;
///   kTurn          a horizontal entering at y turns upward at x;
///   kAnnihilation  entries at x and y annihilate at (x,y);
///   kCrossing      entries at x and y cross at (x,y).
///
/// The kRot* cases are the diagrams whose quarter-turn image has a single
/// vertical entering at (x,-b) of [-a,a] x [-b,b]. They live on the rotated
/// window [-b,b] x [-a,a], with the horizontal entering at ordinate -x and
/// the extra event at abscissa y (or y0) and ordinate -x0:
///   kRotPass            the horizontal crosses the window;
///   kRotVerticalDies    a vertical entering at y dies on it;
///   kRotAnnihilation    it annihilates with a vertical entering at y;
///   kRotBirthAnnihilation  an ex-nihilo pair at (y0,-x0) whose vertical
///                       annihilates with it;
///   kRotEntryTurn       a vertical entering at y0 turns right at -x0 below it;
///   kRotDoubleTurn      it turns up at y0, then right again at -x0;
///   kRotKillTurn        a vertical entering at y0 kills it, then turns at -x0;
///   kRotSplitTurn       it spawns a vertical at y0 that turns at -x0;
///   kRotCrossTurn       a vertical entering at y0 crosses it, then turns.
enum class ElementaryCase {
  kEmpty,
  kVertical,
  kKill,
  kTurn,
  kAnnihilation,
  kCrossing,
  kRotPass,
  kRotVerticalDies,
  kRotAnnihilation,
  kRotBirthAnnihilation,
  kRotEntryTurn,
  kRotDoubleTurn,
  kRotKillTurn,
  kRotSplitTurn,
  kRotCrossTurn,
};

inline constexpr ElementaryCase kAllElementaryCases[] = {
    ElementaryCase::kEmpty,           ElementaryCase::kVertical,
    ElementaryCase::kKill,            ElementaryCase::kTurn,
    ElementaryCase::kAnnihilation,    ElementaryCase::kCrossing,
    ElementaryCase::kRotPass,         ElementaryCase::kRotVerticalDies,
    ElementaryCase::kRotAnnihilation, ElementaryCase::kRotBirthAnnihilation,
    ElementaryCase::kRotEntryTurn,    ElementaryCase::kRotDoubleTurn,
    ElementaryCase::kRotKillTurn,     ElementaryCase::kRotSplitTurn,
    ElementaryCase::kRotCrossTurn,
};

std::string_view to_string(ElementaryCase c);

struct ElementaryCoords {
  double a = 1;
  double b = 1;
  double x = 0;
  double y = 0;
  double x0 = 0;
  double y0 = 0;
};

/// True for the kRot* cases.
bool is_rotated_case(ElementaryCase c);

/// Window of the case: [-a,a] x [-b,b], or [-b,b] x [-a,a] when rotated.
Rectangle elementary_window(ElementaryCase c, const ElementaryCoords& k);

/// Closed-form log density of the case under Poisson entries (nu_h, nu_v).
/// A violated position constraint or a vanishing factor yields
/// finite_support = false.
LogDensity elementary_density_oracle(ElementaryCase c, const ElementaryCoords& k,
                                     const Parameter& p, double nu_h,
                                     double nu_v);

}  // namespace bullet
