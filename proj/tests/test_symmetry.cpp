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

#include <map>

#include "bullet/diagram.hpp"
#include "bullet/presets.hpp"
#include "bullet/sampler.hpp"
#include "bullet/skeleton.hpp"
#include "bullet/symmetry.hpp"
#include "support.hpp"

namespace bullet {
namespace {

using testing::hseg;
using testing::kSquare;
using testing::vseg;
using K = PointKind;

KindMap pullback(std::initializer_list<std::pair<K, K>> pairs) {
  KindMap m{};
  for (auto [k, v] : pairs) m[index_of(k)] = v;
  return m;
}

TEST(Group, Names) {
  for (Symmetry g : kAllSymmetries) {
    EXPECT_EQ(symmetry_from_string(to_string(g)), g);
  }
  EXPECT_THROW(symmetry_from_string("pi4"), Error);
}

TEST(Group, PointImages) {
  EXPECT_EQ(apply(Symmetry::kRot90, Point{1, 2}), (Point{-2, 1}));
  EXPECT_EQ(apply(Symmetry::kRot180, Point{1, 2}), (Point{-1, -2}));
  EXPECT_EQ(apply(Symmetry::kRot270, Point{1, 2}), (Point{2, -1}));
  EXPECT_EQ(apply(Symmetry::kReflect, Point{1, 2}), (Point{2, 1}));
  // r o rot90: (1,2) -> (-2,1) -> (1,-2)
  EXPECT_EQ(apply(Symmetry::kReflectRot90, Point{1, 2}), (Point{1, -2}));
}

TEST(Group, TableIsDihedral) {
  for (Symmetry a : kAllSymmetries) {
    EXPECT_EQ(compose(a, Symmetry::kIdentity), a);
    EXPECT_EQ(compose(Symmetry::kIdentity, a), a);
    EXPECT_EQ(compose(a, inverse(a)), Symmetry::kIdentity);
    for (Symmetry b : kAllSymmetries) {
      for (Symmetry c : kAllSymmetries) {
        EXPECT_EQ(compose(a, compose(b, c)), compose(compose(a, b), c));
      }
      const Point p{0.3, -0.7};
      EXPECT_EQ(apply(compose(a, b), p), apply(a, apply(b, p)));
    }
  }
  EXPECT_EQ(compose(Symmetry::kRot90, Symmetry::kRot90), Symmetry::kRot180);
  EXPECT_EQ(compose(Symmetry::kReflect, Symmetry::kReflect), Symmetry::kIdentity);
  // rot 270 = r o rot 90 o r
  EXPECT_EQ(compose(Symmetry::kReflect, compose(Symmetry::kRot90, Symmetry::kReflect)),
            Symmetry::kRot270);
  EXPECT_EQ(compose(Symmetry::kReflect, Symmetry::kRot180), Symmetry::kReflectRot180);
}

TEST(Group, RectangleImages) {
  const Rectangle r(0, 1, 2, 4);
  EXPECT_EQ(apply(Symmetry::kRot90, r), Rectangle(-4, 0, -1, 2));
  EXPECT_EQ(apply(Symmetry::kRot180, r), Rectangle(-2, -4, 0, -1));
  EXPECT_EQ(apply(Symmetry::kReflect, r), Rectangle(1, 0, 4, 2));
  for (Symmetry g : kAllSymmetries) EXPECT_EQ(apply(g, kSquare), kSquare);
}

TEST(KindMaps, IdentityIsTrivial) {
  const KindMap m = stats_map_under_symmetry(Symmetry::kIdentity);
  for (K k : kAllPointKinds) EXPECT_EQ(m[index_of(k)], k);
}

TEST(KindMaps, HalfTurnTable) {
  const KindMap expected = pullback({{K::VE, K::VS}, {K::VS, K::VE}, {K::HE, K::HS},
                                     {K::HS, K::HE}, {K::OB, K::OA}, {K::OA, K::OB},
                                     {K::VB, K::VA}, {K::VA, K::VB}, {K::HB, K::HA},
                                     {K::HA, K::HB}, {K::VT, K::HT}, {K::HT, K::VT},
                                     {K::CC, K::CC}});
  EXPECT_EQ(stats_map_under_symmetry(Symmetry::kRot180), expected);
  EXPECT_EQ(stats_map_under_symmetry(Symmetry::kRot180)[index_of(K::HB)], K::HA);
}

TEST(KindMaps, QuarterTurnTable) {
  const KindMap expected = pullback({{K::VE, K::HE}, {K::HE, K::VS}, {K::OB, K::HT},
                                     {K::VB, K::HB}, {K::HB, K::VA}, {K::VT, K::OB},
                                     {K::HT, K::OA}, {K::HA, K::VB}, {K::VA, K::HA},
                                     {K::OA, K::VT}, {K::VS, K::HS}, {K::HS, K::VE},
                                     {K::CC, K::CC}});
  EXPECT_EQ(stats_map_under_symmetry(Symmetry::kRot90), expected);
}

TEST(KindMaps, ReflectionSwapsRoles) {
  const KindMap expected = pullback({{K::VE, K::HE}, {K::HE, K::VE}, {K::VS, K::HS},
                                     {K::HS, K::VS}, {K::VB, K::HB}, {K::HB, K::VB},
                                     {K::VT, K::HT}, {K::HT, K::VT}, {K::VA, K::HA},
                                     {K::HA, K::VA}, {K::OB, K::OB}, {K::OA, K::OA},
                                     {K::CC, K::CC}});
  EXPECT_EQ(stats_map_under_symmetry(Symmetry::kReflect), expected);
}

TEST(KindMaps, ComposeLikeTheGroup) {
  for (Symmetry a : kAllSymmetries) {
    for (Symmetry b : kAllSymmetries) {
      const KindMap fa = forward_kind_map(a);
      const KindMap fb = forward_kind_map(b);
      const KindMap fab = forward_kind_map(compose(a, b));
      for (K k : kAllPointKinds) {
        EXPECT_EQ(fab[index_of(k)], fa[index_of(fb[index_of(k)])]);
      }
    }
  }
}

TEST(ApplySymmetry, IdentityIsIdentity) {
  Configuration u(kSquare, {vseg(0.2, -1, 0.5, K::VE, K::VA),
                            hseg(0.5, -1, 1, K::HE, K::HS)},
                  {});
  EXPECT_EQ(apply_symmetry(Symmetry::kIdentity, u), u);
}

TEST(ApplySymmetry, HalfTurnSegment) {
  Configuration u(kSquare, {vseg(0.2, -1, 0.5, K::VE, K::VS)}, {});
  const Configuration w = apply_symmetry(Symmetry::kRot180, u);
  ASSERT_EQ(w.segments.size(), 1u);
  const Segment& s = w.segments[0];
  EXPECT_EQ(s.orientation, Orientation::kVertical);
  EXPECT_EQ(s.anchor, -0.2);
  EXPECT_EQ(s.lo, -0.5);
  EXPECT_EQ(s.hi, 1);
}

TEST(ApplySymmetry, QuarterTurnSegment) {
  Configuration u(kSquare, {vseg(0.2, -1, 0.5, K::VE, K::VS)}, {});
  const Configuration w = apply_symmetry(Symmetry::kRot90, u);
  ASSERT_EQ(w.segments.size(), 1u);
  const Segment& s = w.segments[0];
  EXPECT_EQ(s.orientation, Orientation::kHorizontal);
  EXPECT_EQ(s.anchor, 0.2);
  EXPECT_EQ(s.lo, -0.5);
  EXPECT_EQ(s.hi, 1);
  EXPECT_EQ(w.rect, kSquare);
}

TEST(ApplySymmetry, AnnihilationPairUnderHalfTurn) {
  // Entries meeting at (0.5, 0.3) in OA become an ex-nihilo pair at (-0.5,-0.3).
  const Rectangle r(0, 0, 1, 1);
  Configuration u(r, {vseg(0.5, 0, 0.3, K::VE, K::OA), hseg(0.3, 0, 0.5, K::HE, K::OA)},
                  {});
  const Configuration w = apply_symmetry(Symmetry::kRot180, u);
  EXPECT_TRUE(validate_configuration(w).empty());
  EXPECT_EQ(kind_mismatches(w), 0u);
  const ConfigStats s = extract_stats(w);
  EXPECT_EQ(s[K::OB], 1);
  EXPECT_EQ(s[K::VS], 1);
  EXPECT_EQ(s[K::HS], 1);
}

struct Sample {
  std::string preset;
  Configuration u;
};

std::vector<Sample> samples() {
  std::vector<Sample> out;
  const Rectangle r(-1, -1, 1, 1);
  for (const Preset& p : preset_registry()) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      RngStream rng(derive_seed(seed, 77));
      out.push_back({p.name, build_diagram(p.params, p.law, r, rng)});
    }
  }
  return out;
}

TEST(ApplySymmetry, ImagesAreValidAndConsistent) {
  for (const Sample& s : samples()) {
    const ConfigStats base = extract_stats(s.u);
    const Skeleton k = skeleton_of(s.u);
    for (Symmetry g : kAllSymmetries) {
      SCOPED_TRACE(s.preset + " " + std::string(to_string(g)));
      const Configuration w = apply_symmetry(g, s.u);
      ASSERT_TRUE(validate_configuration(w).empty());
      EXPECT_EQ(kind_mismatches(w), 0u);
      const ConfigStats ws = extract_stats(w);
      const KindMap pb = stats_map_under_symmetry(g);
      for (K kind : kAllPointKinds) EXPECT_EQ(ws[kind], base[pb[index_of(kind)]]);
      const ConfigStats mapped = apply_symmetry(g, base);
      EXPECT_EQ(mapped.counts, ws.counts);
      EXPECT_EQ(mapped.n, ws.n);
      EXPECT_EQ(mapped.m, ws.m);
      EXPECT_DOUBLE_EQ(mapped.LV, ws.LV);
      EXPECT_DOUBLE_EQ(mapped.LH, ws.LH);
      EXPECT_EQ(skeleton_of(w), apply_symmetry(g, k));
    }
  }
}

TEST(ApplySymmetry, LengthLemmas) {
  for (const Sample& s : samples()) {
    const ConfigStats a = extract_stats(s.u);
    const ConfigStats pi = extract_stats(apply_symmetry(Symmetry::kRot180, s.u));
    const ConfigStats pi2 = extract_stats(apply_symmetry(Symmetry::kRot90, s.u));
    EXPECT_DOUBLE_EQ(pi.LV, a.LV);
    EXPECT_DOUBLE_EQ(pi.LH, a.LH);
    EXPECT_DOUBLE_EQ(pi2.LV, a.LH);
    EXPECT_DOUBLE_EQ(pi2.LH, a.LV);
  }
}

TEST(ApplySymmetry, GroupAction) {
  const auto all = samples();
  for (std::size_t i = 0; i < all.size(); i += 7) {
    const Configuration& u = all[i].u;
    for (Symmetry a : kAllSymmetries) {
      for (Symmetry b : kAllSymmetries) {
        EXPECT_EQ(apply_symmetry(a, apply_symmetry(b, u)),
                  apply_symmetry(compose(a, b), u));
      }
    }
  }
}

}  // namespace
}  // namespace bullet
