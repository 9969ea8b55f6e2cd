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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bullet/density.hpp"
#include "bullet/diagram.hpp"
#include "bullet/elementary.hpp"
#include "bullet/presets.hpp"
#include "support.hpp"

namespace bullet {
namespace {

using testing::hseg;
using testing::kSquare;
using testing::vseg;
using K = PointKind;
using C = ElementaryCase;

const Parameter kLoop{1, 0, 0, 1, 1, 0, 0, 1};

TEST(SegmentLengths, Examples) {
  EXPECT_EQ(segment_lengths(Configuration(kSquare)), std::make_pair(0.0, 0.0));
  Configuration h(kSquare, {hseg(0.1, -1, 1, K::HE, K::HS)}, {});
  EXPECT_EQ(segment_lengths(h), std::make_pair(0.0, 2.0));
  Configuration turn(kSquare, {hseg(0, -1, 0, K::HE, K::VT), vseg(0, 0, 1, K::VT, K::VS)},
                     {});
  EXPECT_EQ(segment_lengths(turn), std::make_pair(1.0, 1.0));
}

TEST(LogDensity, EmptyUnderLoop) {
  const LogDensity d = log_density(Configuration(kSquare), kLoop, PoissonLaw{1, 1});
  EXPECT_TRUE(d.finite_support);
  EXPECT_DOUBLE_EQ(d.value, -8.0);
}

TEST(LogDensity, SingleVertical) {
  Configuration u(kSquare, {vseg(0.3, -1, 1, K::VE, K::VS)}, {});
  const LogDensity d =
      log_density(u, Parameter{0, 0, 0, 0, 0, 0, 0, 1}, PoissonLaw{1, 1});
  EXPECT_TRUE(d.finite_support);
  EXPECT_DOUBLE_EQ(d.value, -4.0);
}

TEST(LogDensity, TurnUnderLoop) {
  Configuration u(kSquare, {hseg(0, -1, 0, K::HE, K::VT), vseg(0, 0, 1, K::VT, K::VS)},
                  {});
  const LogDensity d = log_density(u, kLoop, PoissonLaw{1, 1});
  EXPECT_TRUE(d.finite_support);
  EXPECT_DOUBLE_EQ(d.value, -10.0);
}

TEST(LogDensity, ZeroBaseGivesNoSupport) {
  // An annihilation when p0 = 0.
  Configuration u(kSquare, {vseg(0.5, -1, 0.3, K::VE, K::OA), hseg(0.3, -1, 0.5, K::HE, K::OA)},
                  {});
  const LogDensity d =
      log_density(u, Parameter{0, 1, 1, 0, 0, 0.5, 0.5, 0}, PoissonLaw{1, 1});
  EXPECT_FALSE(d.finite_support);
  EXPECT_TRUE(std::isinf(d.value));
  EXPECT_LT(d.value, 0);
  // A vertical entry when nu_v = 0.
  Configuration v(kSquare, {vseg(0.3, -1, 1, K::VE, K::VS)}, {});
  EXPECT_FALSE(log_density(v, kLoop, PoissonLaw{1, 0}).finite_support);
  // Zero count over zero base is fine.
  EXPECT_TRUE(log_density(Configuration(kSquare), Parameter{}, PoissonLaw{0, 0})
                  .finite_support);
}

TEST(LogDensity, RejectsExplicitLawAndInvalidInput) {
  EXPECT_THROW(log_density(Configuration(kSquare), kLoop, ExplicitLaw{}), Error);
  Configuration bad(kSquare, {vseg(0.3, -1, 0.2, K::VE, K::VA)}, {});
  EXPECT_THROW(log_density(bad, kLoop, PoissonLaw{1, 1}), Error);
}

TEST(LogDensity, SimulatedDiagramsHaveSupport) {
  const Rectangle r(0, 0, 2, 2);
  for (const Preset& p : preset_registry()) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      RngStream rng(derive_seed(seed, 3));
      const Configuration u = build_diagram(p.params, p.law, r, rng);
      const LogDensity d = log_density(u, p.params, p.law);
      ASSERT_TRUE(d.finite_support) << p.name << " " << seed;
      // Depends only on the statistics, not on segment order.
      Configuration shuffled = u;
      std::reverse(shuffled.segments.begin(), shuffled.segments.end());
      EXPECT_NEAR(log_density(shuffled, p.params, p.law).value, d.value, 1e-12);
    }
  }
}

// Forward configuration realising an elementary case.
Configuration realise(C c, const ElementaryCoords& k) {
  const double a = k.a;
  const double b = k.b;
  const double x = k.x;
  const double y = k.y;
  const double x0 = k.x0;
  const double y0 = k.y0;
  const Rectangle r = elementary_window(c, k);
  switch (c) {
    case C::kEmpty:
      return Configuration(r);
    case C::kVertical:
      return Configuration(r, {vseg(x, -b, b, K::VE, K::VS)}, {});
    case C::kKill:
      return Configuration(
          r, {vseg(x, -b, b, K::VE, K::VS), hseg(y, -a, x, K::HE, K::HA)}, {});
    case C::kTurn:
      return Configuration(
          r, {hseg(y, -a, x, K::HE, K::VT), vseg(x, y, b, K::VT, K::VS)}, {});
    case C::kAnnihilation:
      return Configuration(
          r, {vseg(x, -b, y, K::VE, K::OA), hseg(y, -a, x, K::HE, K::OA)}, {});
    case C::kCrossing:
      return Configuration(
          r, {vseg(x, -b, b, K::VE, K::VS), hseg(y, -a, a, K::HE, K::HS)}, {{x, y}});

    // Rotated window [-b,b] x [-a,a]; the main horizontal sits at -x.
    case C::kRotPass:
      return Configuration(r, {hseg(-x, -b, b, K::HE, K::HS)}, {});
    case C::kRotVerticalDies:
      return Configuration(
          r, {hseg(-x, -b, b, K::HE, K::HS), vseg(y, -a, -x, K::VE, K::VA)}, {});
    case C::kRotAnnihilation:
      return Configuration(
          r, {hseg(-x, -b, y, K::HE, K::OA), vseg(y, -a, -x, K::VE, K::OA)}, {});
    case C::kRotBirthAnnihilation:
      return Configuration(r,
                           {hseg(-x, -b, y0, K::HE, K::OA),
                            vseg(y0, -x0, -x, K::OB, K::OA),
                            hseg(-x0, y0, b, K::OB, K::HS)},
                           {});
    case C::kRotEntryTurn:
      return Configuration(r,
                           {hseg(-x, -b, b, K::HE, K::HS),
                            vseg(y0, -a, -x0, K::VE, K::HT),
                            hseg(-x0, y0, b, K::HT, K::HS)},
                           {});
    case C::kRotDoubleTurn:
      return Configuration(r,
                           {hseg(-x, -b, y0, K::HE, K::VT),
                            vseg(y0, -x, -x0, K::VT, K::HT),
                            hseg(-x0, y0, b, K::HT, K::HS)},
                           {});
    case C::kRotKillTurn:
      return Configuration(r,
                           {hseg(-x, -b, y0, K::HE, K::HA),
                            vseg(y0, -a, -x0, K::VE, K::HT),
                            hseg(-x0, y0, b, K::HT, K::HS)},
                           {});
    case C::kRotSplitTurn:
      return Configuration(r,
                           {hseg(-x, -b, b, K::HE, K::HS),
                            vseg(y0, -x, -x0, K::VB, K::HT),
                            hseg(-x0, y0, b, K::HT, K::HS)},
                           {});
    case C::kRotCrossTurn:
      return Configuration(r,
                           {hseg(-x, -b, b, K::HE, K::HS),
                            vseg(y0, -a, -x0, K::VE, K::HT),
                            hseg(-x0, y0, b, K::HT, K::HS)},
                           {{y0, -x}});
  }
  throw Error("unknown case");
}

// Cases whose extra turn sits below the main horizontal (x < x0).
bool turn_below(C c) {
  return c == C::kRotBirthAnnihilation || c == C::kRotEntryTurn;
}

ElementaryCoords draw_coords(C c, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  ElementaryCoords k;
  k.a = 0.5 + 1.5 * unit(gen);
  k.b = 0.5 + 1.5 * unit(gen);
  k.x = k.a * (2 * unit(gen) - 1);
  k.y = k.b * (2 * unit(gen) - 1);
  k.y0 = k.b * (2 * unit(gen) - 1);
  double s = k.a * (2 * unit(gen) - 1);
  double t = k.a * (2 * unit(gen) - 1);
  if (s > t) std::swap(s, t);
  // s < t are two ordinates in (-a, a).
  if (turn_below(c)) {
    k.x0 = -s;
    k.x = -t;
  } else {
    k.x = -s;
    k.x0 = -t;
  }
  return k;
}

Parameter draw_parameter(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> rate(0.1, 2.0);
  std::uniform_real_distribution<double> prob(0.05, 1.0);
  Parameter p{rate(gen), rate(gen), rate(gen), rate(gen), rate(gen), 0, 0, 0};
  // Four positive weights, the last one the crossing probability.
  const double w[4] = {prob(gen), prob(gen), prob(gen), prob(gen)};
  const double total = w[0] + w[1] + w[2] + w[3];
  p.pV = w[0] / total;
  p.pH = w[1] / total;
  p.p0 = w[2] / total;
  return p;
}

TEST(Oracle, AgreesWithLogDensity) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> nu(0.1, 3.0);
  for (C c : kAllElementaryCases) {
    for (int i = 0; i < 100; ++i) {
      SCOPED_TRACE(std::string(to_string(c)) + " draw " + std::to_string(i));
      const ElementaryCoords k = draw_coords(c, gen);
      const Parameter p = draw_parameter(gen);
      const double nu_h = nu(gen);
      const double nu_v = nu(gen);
      const Configuration u = realise(c, k);
      ASSERT_TRUE(validate_configuration(u).empty());
      ASSERT_EQ(kind_mismatches(u), 0u);
      const LogDensity got = log_density(u, p, PoissonLaw{nu_h, nu_v});
      const LogDensity want = elementary_density_oracle(c, k, p, nu_h, nu_v);
      ASSERT_TRUE(got.finite_support);
      ASSERT_TRUE(want.finite_support);
      EXPECT_NEAR(got.value, want.value, 1e-12 * std::max(1.0, std::abs(want.value)));
    }
  }
}

TEST(Oracle, EmptyRowMatchesExactly) {
  ElementaryCoords k;
  const LogDensity o = elementary_density_oracle(C::kEmpty, k, kLoop, 1, 1);
  EXPECT_EQ(o.value, log_density(Configuration(kSquare), kLoop, PoissonLaw{1, 1}).value);
}

TEST(Oracle, CrossingCarriesTheCrossingFactor) {
  ElementaryCoords k;
  k.x = 0.1;
  k.y = 0.2;
  Parameter p{0, 0, 0, 0, 0, 0.1, 0.2, 0.3};
  const LogDensity with = elementary_density_oracle(C::kCrossing, k, p, 1, 1);
  EXPECT_NEAR(with.value, -4 + std::log(0.4), 1e-15);
  p.p0 = 0.7;
  EXPECT_FALSE(elementary_density_oracle(C::kCrossing, k, p, 1, 1).finite_support);
}

TEST(Oracle, ViolatedIndicatorHasNoSupport) {
  const Parameter p{1, 1, 1, 1, 1, 0.2, 0.2, 0.2};
  for (C c : kAllElementaryCases) {
    if (c == C::kEmpty) continue;
    ElementaryCoords k;
    k.x = 3;  // outside every window
    k.x0 = 3.5;
    k.y = 0.1;
    k.y0 = 0.2;
    EXPECT_FALSE(elementary_density_oracle(c, k, p, 1, 1).finite_support)
        << to_string(c);
  }
  // Turn below instead of above.
  ElementaryCoords k;
  k.x = 0.5;
  k.x0 = 0.2;
  k.y0 = 0.1;
  EXPECT_FALSE(elementary_density_oracle(C::kRotEntryTurn, k, p, 1, 1).finite_support);
  EXPECT_TRUE(elementary_density_oracle(C::kRotDoubleTurn, k, p, 1, 1).finite_support);
}

}  // namespace
}  // namespace bullet
