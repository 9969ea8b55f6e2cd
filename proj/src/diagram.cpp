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

#include "bullet/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "bullet/skeleton.hpp"
#include "roles.hpp"

namespace bullet {

using detail::Role;

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kEmptySegment: return "empty segment";
    case ViolationKind::kOutsideRectangle: return "outside rectangle";
    case ViolationKind::kDanglingEndpoint: return "dangling endpoint";
    case ViolationKind::kDuplicateAnchor: return "duplicate anchor";
    case ViolationKind::kBadCrossing: return "bad crossing";
    case ViolationKind::kNonFinite: return "non-finite coordinate";
  }
  return "unknown";
}

namespace {

bool is_vertical(const Segment& s) {
  return s.orientation == Orientation::kVertical;
}

// Segments of one orientation keyed by anchor. Duplicates are reported
// separately; the first occurrence wins here.
using AnchorMap = std::map<double, std::size_t>;

struct Index {
  AnchorMap verticals;
  AnchorMap horizontals;
};

Index build_index(const Configuration& u, std::vector<Violation>* out) {
  Index idx;
  for (std::size_t i = 0; i < u.segments.size(); ++i) {
    const Segment& s = u.segments[i];
    auto& map = is_vertical(s) ? idx.verticals : idx.horizontals;
    if (!map.emplace(s.anchor, i).second && out != nullptr) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "segment " << i << " shares anchor " << s.anchor
          << " with segment " << map[s.anchor];
      out->push_back({ViolationKind::kDuplicateAnchor, msg.str(), i, {}});
    }
  }
  return idx;
}

// Perpendicular segment through the interior endpoint `pos` of a segment
// anchored at `anchor`; nullptr when none contains it.
const Segment* perpendicular_at(const Configuration& u, const AnchorMap& map,
                                double pos, double anchor) {
  const auto it = map.find(pos);
  if (it == map.end()) return nullptr;
  const Segment& s = u.segments[it->second];
  return (s.lo <= anchor && anchor <= s.hi) ? &s : nullptr;
}

Role role_at(const Segment& s, double pos) {
  if (pos == s.lo) return Role::kStart;
  if (pos == s.hi) return Role::kEnd;
  return Role::kPass;
}

std::string describe(std::size_t i, const Segment& s, const char* what) {
  std::ostringstream msg;
  msg.precision(17);
  msg << (is_vertical(s) ? "vertical" : "horizontal") << " segment " << i
      << " at " << s.anchor << ": " << what;
  return msg.str();
}

}  // namespace

std::vector<Violation> validate_configuration(const Configuration& u) {
  std::vector<Violation> out;
  const Rectangle& r = u.rect;

  for (std::size_t i = 0; i < u.segments.size(); ++i) {
    const Segment& s = u.segments[i];
    if (!std::isfinite(s.anchor) || !std::isfinite(s.lo) ||
        !std::isfinite(s.hi)) {
      out.push_back({ViolationKind::kNonFinite, describe(i, s, "non-finite"),
                     i, {}});
      continue;
    }
    if (!(s.lo < s.hi)) {
      out.push_back({ViolationKind::kEmptySegment,
                     describe(i, s, "lo must be below hi"), i, {}});
    }
    const bool inside =
        is_vertical(s)
            ? (r.x0() < s.anchor && s.anchor < r.x1() && r.y0() <= s.lo &&
               s.hi <= r.y1())
            : (r.y0() < s.anchor && s.anchor < r.y1() && r.x0() <= s.lo &&
               s.hi <= r.x1());
    if (!inside) {
      out.push_back({ViolationKind::kOutsideRectangle,
                     describe(i, s, "not inside the rectangle"), i, {}});
    }
  }
  if (!out.empty()) return out;

  const Index idx = build_index(u, &out);

  for (std::size_t i = 0; i < u.segments.size(); ++i) {
    const Segment& s = u.segments[i];
    const bool v = is_vertical(s);
    const double lo_edge = v ? r.y0() : r.x0();
    const double hi_edge = v ? r.y1() : r.x1();
    const AnchorMap& perp = v ? idx.horizontals : idx.verticals;
    if (s.lo != lo_edge &&
        perpendicular_at(u, perp, s.lo, s.anchor) == nullptr) {
      out.push_back({ViolationKind::kDanglingEndpoint,
                     describe(i, s, "start is neither on the edge nor on a "
                                    "perpendicular segment"),
                     i, s.start()});
    }
    if (s.hi != hi_edge &&
        perpendicular_at(u, perp, s.hi, s.anchor) == nullptr) {
      out.push_back({ViolationKind::kDanglingEndpoint,
                     describe(i, s, "end is neither on the edge nor on a "
                                    "perpendicular segment"),
                     i, s.end()});
    }
  }

  std::vector<Point> seen = u.crossings;
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 1; k < seen.size(); ++k) {
    if (seen[k] == seen[k - 1]) {
      out.push_back({ViolationKind::kBadCrossing, "duplicate crossing", {},
                     seen[k]});
    }
  }
  for (const Point& c : u.crossings) {
    const auto vit = idx.verticals.find(c.x);
    const auto hit = idx.horizontals.find(c.y);
    bool ok = vit != idx.verticals.end() && hit != idx.horizontals.end();
    if (ok) {
      const Segment& vs = u.segments[vit->second];
      const Segment& hs = u.segments[hit->second];
      ok = vs.lo < c.y && c.y < vs.hi && hs.lo < c.x && c.x < hs.hi;
    }
    if (!ok) {
      out.push_back({ViolationKind::kBadCrossing,
                     "crossing is not interior to a vertical and a "
                     "horizontal segment",
                     {}, c});
    }
  }
  return out;
}

void require_valid(const Configuration& u) {
  const auto violations = validate_configuration(u);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid configuration (" << violations.size() << " violation"
      << (violations.size() == 1 ? "" : "s") << "): ";
  for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
    if (i) msg << "; ";
    msg << to_string(violations[i].kind) << ": " << violations[i].message;
  }
  throw Error(msg.str());
}

std::vector<ClassifiedPoint> classify_points(const Configuration& u) {
  require_valid(u);
  const Index idx = build_index(u, nullptr);
  const Rectangle& r = u.rect;
  std::vector<ClassifiedPoint> out;

  for (const Segment& s : u.segments) {
    if (is_vertical(s)) {
      for (const bool at_start : {true, false}) {
        const double y = at_start ? s.lo : s.hi;
        const Role own = at_start ? Role::kStart : Role::kEnd;
        if (y == (at_start ? r.y0() : r.y1())) {
          out.push_back({{s.anchor, y}, detail::kind_from_roles(own, Role::kNone)});
          continue;
        }
        const Segment* h = perpendicular_at(u, idx.horizontals, y, s.anchor);
        out.push_back({{s.anchor, y},
                       detail::kind_from_roles(own, role_at(*h, s.anchor))});
      }
      // Crossings: horizontals strictly between lo and hi whose open range
      // contains the anchor.
      for (auto it = idx.horizontals.upper_bound(s.lo);
           it != idx.horizontals.end() && it->first < s.hi; ++it) {
        const Segment& h = u.segments[it->second];
        if (h.lo < s.anchor && s.anchor < h.hi) {
          out.push_back({{s.anchor, h.anchor}, PointKind::CC});
        }
      }
    } else {
      for (const bool at_start : {true, false}) {
        const double x = at_start ? s.lo : s.hi;
        const Role own = at_start ? Role::kStart : Role::kEnd;
        if (x == (at_start ? r.x0() : r.x1())) {
          out.push_back({{x, s.anchor}, detail::kind_from_roles(Role::kNone, own)});
          continue;
        }
        const Segment* v = perpendicular_at(u, idx.verticals, x, s.anchor);
        const Role vr = role_at(*v, s.anchor);
        // Endpoint-to-endpoint meetings are emitted from the vertical side.
        if (vr == Role::kPass) {
          out.push_back({{x, s.anchor}, detail::kind_from_roles(vr, own)});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClassifiedPoint> stored_points(const Configuration& u) {
  std::vector<ClassifiedPoint> out;
  out.reserve(2 * u.segments.size() + u.crossings.size());
  for (const Segment& s : u.segments) {
    out.push_back({s.start(), s.lo_kind});
    out.push_back({s.end(), s.hi_kind});
  }
  for (const Point& c : u.crossings) out.push_back({c, PointKind::CC});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t kind_mismatches(const Configuration& u) {
  const auto geometric = classify_points(u);
  const auto stored = stored_points(u);
  std::vector<ClassifiedPoint> diff;
  std::set_symmetric_difference(geometric.begin(), geometric.end(),
                                stored.begin(), stored.end(),
                                std::back_inserter(diff));
  return diff.size();
}

ConfigStats extract_stats(const Configuration& u) {
  ConfigStats st;
  for (const ClassifiedPoint& p : classify_points(u)) ++st[p.kind];
  for (const Segment& s : u.segments) {
    if (is_vertical(s)) {
      ++st.n;
      st.LV += s.length();
    } else {
      ++st.m;
      st.LH += s.length();
    }
  }
  return st;
}

Configuration restrict_to(const Configuration& u, const Rectangle& sub) {
  if (!u.rect.contains(sub)) {
    throw Error("restriction window is not contained in the rectangle");
  }
  Configuration out(sub);
  for (const Segment& s : u.segments) {
    const bool v = is_vertical(s);
    const double a_lo = v ? sub.x0() : sub.y0();
    const double a_hi = v ? sub.x1() : sub.y1();
    if (!(a_lo < s.anchor && s.anchor < a_hi)) continue;
    const double e_lo = v ? sub.y0() : sub.x0();
    const double e_hi = v ? sub.y1() : sub.x1();
    Segment c = s;
    if (c.lo <= e_lo) {
      c.lo = e_lo;
      c.lo_kind = v ? PointKind::VE : PointKind::HE;
    }
    if (c.hi >= e_hi) {
      c.hi = e_hi;
      c.hi_kind = v ? PointKind::VS : PointKind::HS;
    }
    if (c.lo < c.hi) out.segments.push_back(c);
  }
  for (const Point& p : u.crossings) {
    if (sub.x0() < p.x && p.x < sub.x1() && sub.y0() < p.y && p.y < sub.y1()) {
      out.crossings.push_back(p);
    }
  }
  return out;
}

double config_distance(const Configuration& a, const Configuration& b) {
  if (!(a.rect == b.rect)) {
    throw Error("config_distance requires configurations on the same rectangle");
  }
  if (!(skeleton_of(a) == skeleton_of(b))) return 3.0;

  auto anchors = [](const Configuration& u, Orientation o) {
    std::vector<double> xs;
    for (const Segment& s : u.segments) {
      if (s.orientation == o) xs.push_back(s.anchor);
    }
    std::sort(xs.begin(), xs.end());
    return xs;
  };
  auto mean_gap = [](const std::vector<double>& p, const std::vector<double>& q,
                     double extent) {
    if (p.empty()) return 0.0;
    double sum = 0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
    return sum / static_cast<double>(p.size()) / extent;
  };
  return mean_gap(anchors(a, Orientation::kVertical),
                  anchors(b, Orientation::kVertical), a.rect.width()) +
         mean_gap(anchors(a, Orientation::kHorizontal),
                  anchors(b, Orientation::kHorizontal), a.rect.height());
}

}  // namespace bullet
