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

#include "bullet/symmetry.hpp"

#include <algorithm>
#include <string>

#include "roles.hpp"

namespace bullet {

namespace {

// Integer matrix (a b; c d) acting as (x,y) -> (a x + b y, c x + d y).
struct Matrix {
  int a, b, c, d;
  bool operator==(const Matrix&) const = default;
};

constexpr std::array<Matrix, 8> kMatrices = {{
    {1, 0, 0, 1},    // identity
    {0, -1, 1, 0},   // rot 90
    {-1, 0, 0, -1},  // rot 180
    {0, 1, -1, 0},   // rot 270
    {0, 1, 1, 0},    // r
    {1, 0, 0, -1},   // r o rot 90
    {0, -1, -1, 0},  // r o rot 180
    {-1, 0, 0, 1},   // r o rot 270
}};

constexpr std::array<std::string_view, 8> kNames = {
    "id", "pi2", "pi", "pi32", "r", "rpi2", "rpi", "rpi32"};

const Matrix& matrix(Symmetry g) {
  return kMatrices[static_cast<std::size_t>(g)];
}

Symmetry from_matrix(const Matrix& m) {
  for (std::size_t i = 0; i < kMatrices.size(); ++i) {
    if (kMatrices[i] == m) return kAllSymmetries[i];
  }
  throw Error("matrix is not a symmetry of the square");
}

}  // namespace

std::string_view to_string(Symmetry g) {
  return kNames[static_cast<std::size_t>(g)];
}

Symmetry symmetry_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAllSymmetries[i];
  }
  throw Error("unknown symmetry '" + std::string(name) +
              "' (expected id, r, pi, pi2, pi32, rpi, rpi2 or rpi32)");
}

Symmetry compose(Symmetry outer, Symmetry inner) {
  const Matrix& p = matrix(outer);
  const Matrix& q = matrix(inner);
  return from_matrix({p.a * q.a + p.b * q.c, p.a * q.b + p.b * q.d,
                      p.c * q.a + p.d * q.c, p.c * q.b + p.d * q.d});
}

Symmetry inverse(Symmetry g) {
  for (Symmetry h : kAllSymmetries) {
    if (compose(g, h) == Symmetry::kIdentity) return h;
  }
  throw Error("symmetry without inverse");
}

Point apply(Symmetry g, Point p) {
  const Matrix& m = matrix(g);
  // Coefficients are 0 or +-1, so the image is exact.
  auto term = [](int k, double v) { return k == 0 ? 0.0 : (k > 0 ? v : -v); };
  return {term(m.a, p.x) + term(m.b, p.y), term(m.c, p.x) + term(m.d, p.y)};
}

Rectangle apply(Symmetry g, const Rectangle& r) {
  const Point p = apply(g, Point{r.x0(), r.y0()});
  const Point q = apply(g, Point{r.x1(), r.y1()});
  return Rectangle(std::min(p.x, q.x), std::min(p.y, q.y), std::max(p.x, q.x),
                   std::max(p.y, q.y));
}

bool swaps_axes(Symmetry g) { return matrix(g).a == 0; }

KindMap forward_kind_map(Symmetry g) {
  using detail::flip;
  using detail::Role;
  const Matrix& m = matrix(g);
  KindMap out{};
  for (PointKind k : kAllPointKinds) {
    const detail::Roles r = detail::roles_of(k);
    Role v = r.vertical;
    Role h = r.horizontal;
    if (!swaps_axes(g)) {
      v = m.d > 0 ? v : flip(v);
      h = m.a > 0 ? h : flip(h);
    } else {
      // Horizontals become verticals along c, verticals become horizontals
      // along b.
      const Role nv = m.c > 0 ? h : flip(h);
      const Role nh = m.b > 0 ? v : flip(v);
      v = nv;
      h = nh;
    }
    out[index_of(k)] = detail::kind_from_roles(v, h);
  }
  return out;
}

KindMap stats_map_under_symmetry(Symmetry g) {
  const KindMap fwd = forward_kind_map(g);
  KindMap out{};
  for (PointKind k : kAllPointKinds) out[index_of(fwd[index_of(k)])] = k;
  return out;
}

Configuration apply_symmetry(Symmetry g, const Configuration& u) {
  const KindMap fwd = forward_kind_map(g);
  Configuration out(apply(g, u.rect));
  out.segments.reserve(u.segments.size());
  for (const Segment& s : u.segments) {
    const Point p = apply(g, s.start());
    const Point q = apply(g, s.end());
    Segment t;
    const bool vertical = (s.orientation == Orientation::kVertical) !=
                          swaps_axes(g);
    t.orientation = vertical ? Orientation::kVertical : Orientation::kHorizontal;
    const double ps = vertical ? p.y : p.x;
    const double qs = vertical ? q.y : q.x;
    t.anchor = vertical ? p.x : p.y;
    const PointKind a = fwd[index_of(s.lo_kind)];
    const PointKind b = fwd[index_of(s.hi_kind)];
    if (ps < qs) {
      t.lo = ps;
      t.hi = qs;
      t.lo_kind = a;
      t.hi_kind = b;
    } else {
      t.lo = qs;
      t.hi = ps;
      t.lo_kind = b;
      t.hi_kind = a;
    }
    out.segments.push_back(t);
  }
  out.crossings.reserve(u.crossings.size());
  for (const Point& c : u.crossings) out.crossings.push_back(apply(g, c));
  return out;
}

ConfigStats apply_symmetry(Symmetry g, const ConfigStats& s) {
  const KindMap fwd = forward_kind_map(g);
  ConfigStats out;
  for (PointKind k : kAllPointKinds) out[fwd[index_of(k)]] = s[k];
  if (swaps_axes(g)) {
    out.n = s.m;
    out.m = s.n;
    out.LV = s.LH;
    out.LH = s.LV;
  } else {
    out.n = s.n;
    out.m = s.m;
    out.LV = s.LV;
    out.LH = s.LH;
  }
  return out;
}

}  // namespace bullet
