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

#include "bullet/elementary.hpp"

#include <cmath>
#include <limits>

namespace bullet {

std::string_view to_string(ElementaryCase c) {
  switch (c) {
    case ElementaryCase::kEmpty: return "empty";
    case ElementaryCase::kVertical: return "vertical";
    case ElementaryCase::kKill: return "kill";
    case ElementaryCase::kTurn: return "turn";
    case ElementaryCase::kAnnihilation: return "annihilation";
    case ElementaryCase::kCrossing: return "crossing";
    case ElementaryCase::kRotPass: return "rot-pass";
    case ElementaryCase::kRotVerticalDies: return "rot-vertical-dies";
    case ElementaryCase::kRotAnnihilation: return "rot-annihilation";
    case ElementaryCase::kRotBirthAnnihilation: return "rot-birth-annihilation";
    case ElementaryCase::kRotEntryTurn: return "rot-entry-turn";
    case ElementaryCase::kRotDoubleTurn: return "rot-double-turn";
    case ElementaryCase::kRotKillTurn: return "rot-kill-turn";
    case ElementaryCase::kRotSplitTurn: return "rot-split-turn";
    case ElementaryCase::kRotCrossTurn: return "rot-cross-turn";
  }
  return "unknown";
}

bool is_rotated_case(ElementaryCase c) {
  return static_cast<int>(c) >= static_cast<int>(ElementaryCase::kRotPass);
}

Rectangle elementary_window(ElementaryCase c, const ElementaryCoords& k) {
  return is_rotated_case(c) ? Rectangle(-k.b, -k.a, k.b, k.a)
                            : Rectangle(-k.a, -k.b, k.a, k.b);
}

namespace {

// Product of factors kept in log scale.
struct Product {
  LogDensity d;

  Product& factor(double base) {
    if (base > 0) {
      d.value += std::log(base);
    } else {
      d.finite_support = false;
    }
    return *this;
  }
  Product& indicator(bool holds) {
    if (!holds) d.finite_support = false;
    return *this;
  }
  Product& decay(double exponent) {
    d.value -= exponent;
    return *this;
  }
  LogDensity done() {
    if (!d.finite_support) d.value = -std::numeric_limits<double>::infinity();
    return d;
  }
};

bool between(double lo, double v, double hi) { return lo < v && v < hi; }

}  // namespace

LogDensity elementary_density_oracle(ElementaryCase c, const ElementaryCoords& k,
                                     const Parameter& p, double nu_h,
                                     double nu_v) {
  validate(p);
  const double a = k.a;
  const double b = k.b;
  const double x = k.x;
  const double y = k.y;
  const double x0 = k.x0;
  const double y0 = k.y0;
  const double rv = p.lambdaV + p.tauV;
  const double rh = p.lambdaH + p.tauH;
  const double cross = 1.0 - p.pV - p.pH - p.p0;

  Product f;
  if (!is_rotated_case(c)) {
    f.decay(2 * nu_h * b).decay(2 * nu_v * a).decay(4 * p.lambda0 * a * b);
  } else {
    f.decay(2 * nu_h * a).decay(2 * nu_v * b).decay(4 * p.lambda0 * a * b);
  }

  switch (c) {
    case ElementaryCase::kEmpty:
      break;
    case ElementaryCase::kVertical:
      f.factor(nu_v).indicator(between(-a, x, a)).decay(2 * rv * b);
      break;
    case ElementaryCase::kKill:
      f.factor(p.pV).factor(nu_h).indicator(between(-b, y, b));
      f.decay(rh * (a + x));
      f.factor(nu_v).indicator(between(-a, x, a)).decay(2 * rv * b);
      break;
    case ElementaryCase::kTurn:
      f.factor(nu_h).indicator(between(-b, y, b)).decay(rh * (a + x));
      f.factor(p.tauH).indicator(between(-a, x, a)).decay(rv * (b - y));
      break;
    case ElementaryCase::kAnnihilation:
      f.factor(p.p0).factor(nu_h).indicator(between(-b, y, b));
      f.decay(rh * (a + x));
      f.factor(nu_v).indicator(between(-a, x, a)).decay(rv * (b + y));
      break;
    case ElementaryCase::kCrossing:
      f.factor(cross).factor(nu_h).indicator(between(-b, y, b));
      f.decay(2 * rh * a);
      f.factor(nu_v).indicator(between(-a, x, a)).decay(2 * rv * b);
      break;

    case ElementaryCase::kRotPass:
      f.factor(nu_h).indicator(between(-a, -x, a)).decay(2 * rh * b);
      break;
    case ElementaryCase::kRotVerticalDies:
      f.factor(p.pH).factor(nu_h).indicator(between(-a, -x, a));
      f.decay(2 * rh * b);
      f.factor(nu_v).indicator(between(-b, y, b)).decay(rv * (a - x));
      break;
    case ElementaryCase::kRotAnnihilation:
      f.factor(p.p0).factor(nu_h).indicator(between(-a, -x, a));
      f.decay(rh * (y + b));
      f.factor(nu_v).indicator(between(-b, y, b)).decay(rv * (a - x));
      break;
    case ElementaryCase::kRotBirthAnnihilation:
      f.factor(p.p0).factor(p.lambda0);
      f.indicator(between(-b, y0, b)).indicator(between(-a, -x0, -x));
      f.factor(nu_h).indicator(between(-a, -x, a)).decay(2 * rh * b);
      f.decay(rv * (x0 - x));
      break;
    case ElementaryCase::kRotEntryTurn:
      f.factor(nu_h).indicator(between(-a, -x, a)).decay(2 * rh * b);
      f.factor(nu_v).indicator(between(-b, y0, b)).decay(rv * (a - x0));
      f.factor(p.tauV).indicator(between(-a, -x0, -x)).decay(rh * (b - y0));
      break;
    case ElementaryCase::kRotDoubleTurn:
      f.factor(nu_h).indicator(between(-a, -x, a));
      f.factor(p.tauH).indicator(between(-b, y0, b));
      f.factor(p.tauV).indicator(between(-x, -x0, a));
      f.decay(2 * rh * b).decay(rv * (x - x0));
      break;
    case ElementaryCase::kRotKillTurn:
      f.factor(nu_h).indicator(between(-a, -x, a));
      f.factor(nu_v).indicator(between(-b, y0, b));
      f.factor(p.pV).factor(p.tauV).indicator(between(-x, -x0, a));
      f.decay(2 * rh * b).decay(rv * (a - x0));
      break;
    case ElementaryCase::kRotSplitTurn:
      f.factor(nu_h).indicator(between(-a, -x, a)).decay(2 * rh * b);
      f.factor(p.lambdaH).indicator(between(-b, y0, b)).decay(rv * (x - x0));
      f.factor(p.tauV).indicator(between(-x, -x0, a)).decay(rh * (b - y0));
      break;
    case ElementaryCase::kRotCrossTurn:
      f.factor(nu_h).indicator(between(-a, -x, a));
      f.factor(nu_v).indicator(between(-b, y0, b));
      f.factor(cross);
      f.factor(p.tauV).indicator(between(-x, -x0, a)).decay(rh * (b - y0));
      f.decay(2 * rh * b).decay(rv * (a - x0));
      break;
  }
  return f.done();
}

}  // namespace bullet
