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

#include "bullet/skeleton.hpp"

#include <algorithm>
#include <map>

#include "bullet/diagram.hpp"
#include "roles.hpp"

namespace bullet {

using detail::Role;

namespace {

Role role_in(const SkeletonSegment& s, int pos) {
  if (pos == s.lo) return Role::kStart;
  if (pos == s.hi) return Role::kEnd;
  return Role::kPass;
}

}  // namespace

Skeleton skeleton_of(const Configuration& u) {
  require_valid(u);
  std::map<double, const Segment*> vs;
  std::map<double, const Segment*> hs;
  for (const Segment& s : u.segments) {
    (s.orientation == Orientation::kVertical ? vs : hs).emplace(s.anchor, &s);
  }
  std::map<double, int> vrank;
  std::map<double, int> hrank;
  for (const auto& [x, s] : vs) vrank.emplace(x, static_cast<int>(vrank.size()) + 1);
  for (const auto& [y, s] : hs) hrank.emplace(y, static_cast<int>(hrank.size()) + 1);

  Skeleton k;
  k.n = static_cast<int>(vs.size());
  k.m = static_cast<int>(hs.size());
  const Rectangle& r = u.rect;

  for (const auto& [x, s] : vs) {
    SkeletonSegment e;
    e.rank = vrank.at(x);
    e.lo = s->lo == r.y0() ? 0 : hrank.at(s->lo);
    e.hi = s->hi == r.y1() ? k.m + 1 : hrank.at(s->hi);
    k.verticals.push_back(e);
  }
  for (const auto& [y, s] : hs) {
    SkeletonSegment e;
    e.rank = hrank.at(y);
    e.lo = s->lo == r.x0() ? 0 : vrank.at(s->lo);
    e.hi = s->hi == r.x1() ? k.n + 1 : vrank.at(s->hi);
    k.horizontals.push_back(e);
  }

  // Kinds and crossings follow from the rank structure alone.
  for (SkeletonSegment& v : k.verticals) {
    v.lo_kind = v.lo == 0 ? PointKind::VE
                          : detail::kind_from_roles(
                                Role::kStart,
                                role_in(k.horizontals[v.lo - 1], v.rank));
    v.hi_kind = v.hi == k.m + 1
                    ? PointKind::VS
                    : detail::kind_from_roles(
                          Role::kEnd, role_in(k.horizontals[v.hi - 1], v.rank));
    for (int j = v.lo + 1; j < v.hi; ++j) {
      const SkeletonSegment& h = k.horizontals[j - 1];
      if (h.lo < v.rank && v.rank < h.hi) k.crossings.emplace_back(v.rank, j);
    }
  }
  for (SkeletonSegment& h : k.horizontals) {
    h.lo_kind = h.lo == 0 ? PointKind::HE
                          : detail::kind_from_roles(
                                role_in(k.verticals[h.lo - 1], h.rank),
                                Role::kStart);
    h.hi_kind = h.hi == k.n + 1
                    ? PointKind::HS
                    : detail::kind_from_roles(
                          role_in(k.verticals[h.hi - 1], h.rank), Role::kEnd);
  }
  std::sort(k.crossings.begin(), k.crossings.end());
  return k;
}

Configuration canonical_configuration(const Skeleton& k, const Rectangle& rect) {
  auto xs = [&](int i) {
    if (i == 0) return rect.x0();
    if (i == k.n + 1) return rect.x1();
    return rect.x0() + i * rect.width() / (k.n + 1);
  };
  auto ys = [&](int j) {
    if (j == 0) return rect.y0();
    if (j == k.m + 1) return rect.y1();
    return rect.y0() + j * rect.height() / (k.m + 1);
  };
  Configuration out(rect);
  for (const SkeletonSegment& v : k.verticals) {
    out.segments.push_back({Orientation::kVertical, xs(v.rank), ys(v.lo),
                            ys(v.hi), v.lo_kind, v.hi_kind});
  }
  for (const SkeletonSegment& h : k.horizontals) {
    out.segments.push_back({Orientation::kHorizontal, ys(h.rank), xs(h.lo),
                            xs(h.hi), h.lo_kind, h.hi_kind});
  }
  for (const auto& [i, j] : k.crossings) out.crossings.push_back({xs(i), ys(j)});
  return out;
}

Skeleton apply_symmetry(Symmetry g, const Skeleton& k) {
  // Columns of the symmetry matrix: images of the unit vectors.
  const Point ex = apply(g, Point{1, 0});
  const Point ey = apply(g, Point{0, 1});
  const bool swap = swaps_axes(g);
  const KindMap fwd = forward_kind_map(g);

  auto flip_rank = [](bool keep, int r, int count) {
    return keep ? r : count + 1 - r;
  };
  auto place = [&](const SkeletonSegment& s, int rank, bool keep_dir,
                   int perp_count) {
    SkeletonSegment t;
    t.rank = rank;
    if (keep_dir) {
      t.lo = s.lo;
      t.hi = s.hi;
      t.lo_kind = fwd[index_of(s.lo_kind)];
      t.hi_kind = fwd[index_of(s.hi_kind)];
    } else {
      t.lo = perp_count + 1 - s.hi;
      t.hi = perp_count + 1 - s.lo;
      t.lo_kind = fwd[index_of(s.hi_kind)];
      t.hi_kind = fwd[index_of(s.lo_kind)];
    }
    return t;
  };

  Skeleton out;
  out.n = swap ? k.m : k.n;
  out.m = swap ? k.n : k.m;
  for (const SkeletonSegment& v : k.verticals) {
    if (!swap) {
      out.verticals.push_back(
          place(v, flip_rank(ex.x > 0, v.rank, k.n), ey.y > 0, k.m));
    } else {
      out.horizontals.push_back(
          place(v, flip_rank(ex.y > 0, v.rank, k.n), ey.x > 0, k.m));
    }
  }
  for (const SkeletonSegment& h : k.horizontals) {
    if (!swap) {
      out.horizontals.push_back(
          place(h, flip_rank(ey.y > 0, h.rank, k.m), ex.x > 0, k.n));
    } else {
      out.verticals.push_back(
          place(h, flip_rank(ey.x > 0, h.rank, k.m), ex.y > 0, k.n));
    }
  }
  for (const auto& [i, j] : k.crossings) {
    if (!swap) {
      out.crossings.emplace_back(flip_rank(ex.x > 0, i, k.n),
                                 flip_rank(ey.y > 0, j, k.m));
    } else {
      out.crossings.emplace_back(flip_rank(ey.x > 0, j, k.m),
                                 flip_rank(ex.y > 0, i, k.n));
    }
  }
  auto by_rank = [](const SkeletonSegment& a, const SkeletonSegment& b) {
    return a.rank < b.rank;
  };
  std::sort(out.verticals.begin(), out.verticals.end(), by_rank);
  std::sort(out.horizontals.begin(), out.horizontals.end(), by_rank);
  std::sort(out.crossings.begin(), out.crossings.end());
  return out;
}

}  // namespace bullet
